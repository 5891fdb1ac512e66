#pragma once

#include <numbers>

namespace darkwave {

// All rates and frequencies are stored internally as angular quantities
// (rad/s, rad/s^2). Values quoted "per 2*pi" at the interface convert here.
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr double pi = std::numbers::pi;

constexpr double from_hz(double f) { return two_pi * f; }
constexpr double to_hz(double w) { return w / two_pi; }

constexpr double mhz(double f) { return two_pi * 1e6 * f; }
constexpr double khz(double f) { return two_pi * 1e3 * f; }
constexpr double hz(double f) { return two_pi * f; }

// Chirp rates: "MHz^2" in the papers' reporting convention means the
// instantaneous frequency (in MHz) advances by that many MHz per us.
constexpr double mhz2(double k) { return two_pi * 1e12 * k; }

constexpr double us(double t) { return 1e-6 * t; }
constexpr double ms(double t) { return 1e-3 * t; }

}  // namespace darkwave
