// Walks the full pipeline once: thermal resource, accelerated input,
// teleportation channel, entanglement and fidelity figures of merit.
#include <cstdio>
#include <numbers>

#include <qtele/qtele.hpp>

int main() {
    const double pi = std::numbers::pi;

    const qtele::model_params m(1.0, 0.8, 0.2);
    std::printf("resource: J=%g D=%g T=%g\n", m.J, m.D, m.T);
    std::printf("  thermal concurrence      %.6f\n", qtele::thermal_concurrence(m));

    const qtele::input_params p(pi / 3, 0.4, 0.3);
    std::printf("input: theta=%g phi=%g r=%g\n", p.theta, p.phi, p.r);
    std::printf("  input concurrence        %.6f\n", qtele::input_concurrence(p));

    std::printf("teleported output:\n");
    std::printf("  output concurrence       %.6f\n", qtele::output_concurrence(m, p));
    std::printf("  fidelity at this input   %.6f\n", qtele::teleport_fidelity(m, p));
    std::printf("  average fidelity         %.6f\n",
                qtele::average_fidelity_closed(m, p.r));
    std::printf("  inertial average (r=0)   %.6f\n",
                qtele::average_fidelity_inertial(m));

    const qtele::crossing_report cr = qtele::classical_crossing(m.J, m.D, 0.01, 2);
    if (cr.found)
        std::printf("average fidelity drops below 2/3 between T=%.6f and T=%.6f\n",
                    cr.lo, cr.hi);
    else
        std::printf("average fidelity stays above 2/3 for T in (0.01, 2]\n");
    return 0;
}
