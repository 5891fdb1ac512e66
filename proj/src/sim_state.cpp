#include "darkwave/sim_state.hpp"

#include <stdexcept>

namespace darkwave {

StateLayout::StateLayout(int bins) : m(bins) {
    if (bins < 1) throw std::invalid_argument("state needs at least one bin");
    const size_t mm = static_cast<size_t>(m);
    size_t off = 5;  // alpha (2), nf (1), ff (2)
    off_p = off;
    off += 2 * mm;
    off_vp = off;
    off += 2 * mm;
    off_vm = off;
    off += 2 * mm;
    off_vz = off;
    off += 2 * mm;
    off_z = off;
    off += mm;
    off_pp = off;
    off += 2 * tri_count();
    off_zp = off;
    off += 2 * mm * mm;
    off_mp = off;
    off += 2 * tri_count();
    off_zz = off;
    off += tri_count();
    total = off;
}

template <typename Real>
void initial_state(const BinGrid& grid, SpinRegime regime, CovState<Real>& state) {
    state.resize(grid.size());
    const double sign = regime == SpinRegime::Ground ? -1.0 : 1.0;
    for (int j = 0; j < grid.size(); ++j) {
        state.set_z(j, 0.5 * sign * grid.nj(j));
        if (regime == SpinRegime::Ground) state.set_cmp(j, j, {grid.nj(j), 0.0});
    }
}

template void initial_state<double>(const BinGrid&, SpinRegime, CovState<double>&);
template void initial_state<float>(const BinGrid&, SpinRegime, CovState<float>&);

}  // namespace darkwave
