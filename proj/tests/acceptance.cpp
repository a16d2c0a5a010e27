// Acceptance gate: one line per criterion, PASS or FAIL, nonzero exit on any
// FAIL. Each criterion also enforces its wall-clock budget.

#include <qfusion/sweeps.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace qfusion;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, double budget_s,
               const std::function<SweepResult()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    SweepResult r = body();
    const auto t1 = std::chrono::steady_clock::now();
    const double secs = std::chrono::duration<double>(t1 - t0).count();
    const bool in_budget = secs < budget_s;
    const bool pass = r.ok && in_budget;
    if (!pass) ++failures;
    std::printf("criterion %2d %-52s %s  instances=%lld max_component=%lld %.1fs\n",
                number, label.c_str(), pass ? "PASS" : "FAIL", r.instances,
                r.max_component, secs);
    if (!r.ok) std::printf("             detail: %s\n", r.detail.c_str());
    if (r.ok && !in_budget)
        std::printf("             detail: exceeded %.0fs budget\n", budget_s);
    std::fflush(stdout);
}

SweepResult merge(SweepResult a, const SweepResult& b) {
    a.instances += b.instances;
    if (b.max_component > a.max_component) a.max_component = b.max_component;
    if (a.ok && !b.ok) {
        a.ok = false;
        a.detail = b.detail;
    }
    return a;
}

}  // namespace

int main() {
    criterion(1, "quotient mass equals the product of parts (sum<=8)", 60,
              [] { return sweep_mass(8); });
    criterion(2, "three-route character equality (sum<=7)", 300,
              [] { return sweep_three_routes(7); });
    criterion(3, "filtration model matches the zero-point quotient (sum<=8)", 300,
              [] { return sweep_filtration(8); });
    criterion(4, "mirror symmetry of the two limit characters (sum<=8)", 30,
              [] { return sweep_mirror(8); });
    criterion(5, "level-window components cut to equal-part ideals (k<=3,n<=4)", 120,
              [] { return sweep_window(3, 4, 6); });
    criterion(6, "loop scaling and associated-graded transport (sum<=6)", 120,
              [] { return sweep_flow(6); });
    criterion(7, "long equal-part products stabilize to the level series", 120, [] {
        return merge(sweep_gordon(2, 4, 6), sweep_gordon(3, 4, 6));
    });
    criterion(8, "functional model totals, freeness, and pairing", 300,
              [] { return sweep_funcmodel_core(); });
    criterion(9, "partial fraction identities (n<=6)", 1, [] { return sweep_rho(6); });
    criterion(10, "q-binomial symmetry and both Pascal laws (m<=12)", 1,
              [] { return sweep_qlaws(12); });
    return failures == 0 ? 0 : 1;
}
