// Benchmark: serial reference verifier vs the OpenMP bitmap verifier.

#include <chrono>
#include <cstdio>

#include "qcover/constructions.hpp"
#include "qcover/verify.hpp"

using namespace qcover;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

void bench(const char* name, const CoveringDesign& d, bool run_naive) {
    VerifyOptions opts;
    auto t0 = Clock::now();
    CoverageReport par = verify_cover(d, opts);
    auto t1 = Clock::now();
    double tp = seconds(t0, t1);
    if (run_naive) {
        auto t2 = Clock::now();
        CoverageReport ser = verify_cover_naive(d, opts);
        auto t3 = Clock::now();
        double ts = seconds(t2, t3);
        bool agree = par.covered == ser.covered && par.uncovered == ser.uncovered;
        std::printf("%-28s %8zu blocks  parallel %8.3fs  serial %8.3fs  speedup %5.1fx  %s\n",
                    name, d.size(), tp, ts, ts / tp, agree ? "agree" : "DISAGREE");
    } else {
        std::printf("%-28s %8zu blocks  parallel %8.3fs  (serial skipped)  uncovered=%llu\n",
                    name, d.size(), tp, static_cast<unsigned long long>(par.uncovered));
    }
}

}  // namespace

int main() {
    bench("C2(7,3,2) b396", cover_7_3_2(), true);
    bench("C2(8,4,2) cmrd", simple_cmrd(4), true);
    bench("C2(8,4,3) b6897", cover_8_4_3(), false);
    bench("C2(10,5,2) cmrd", simple_cmrd(5), false);
    bench("C2(10,5,3) c1053", cover_10_5_3(true).design, false);
    return 0;
}
