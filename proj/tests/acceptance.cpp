// Acceptance run: one line per criterion, nonzero exit if any fails.
// usage: acceptance <path-to-leibform-cli>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "leibform/verify.hpp"

using namespace leibform;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

Outcome run_suites_for(const std::vector<std::string>& suites, const std::vector<std::string>& rings,
                       std::size_t min_instances) {
    Outcome out;
    std::ostringstream d;
    for (const auto& ring : rings) {
        VerifyConfig cfg;
        cfg.seed = 1;
        cfg.ring = ring;
        cfg.suites = suites;
        const Report r = run_suites(cfg);
        for (const auto& s : r.suites) {
            d << s.name << (rings.size() > 1 ? "/" + ring : "") << " " << s.instances << " instances, "
              << s.failures.size() << " failures; ";
            if (!s.ok() || s.instances < min_instances) out.ok = false;
            for (const auto& f : s.failures) std::cerr << "  " << s.name << " " << f.check << " " << f.payload.dump() << "\n";
        }
    }
    out.detail = d.str();
    return out;
}

struct Captured {
    std::string output;
    int status = -1;
};

Captured capture(const std::string& cmd) {
    Captured c;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return c;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) c.output.append(buf, got);
    const int st = pclose(p);
    c.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <leibform-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];
    int failed = 0;

    auto criterion = [&](int id, const std::string& name, double limit_s, auto&& body) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o = body();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = limit_s <= 0 || secs < limit_s;
        const bool ok = o.ok && in_time;
        if (!ok) ++failed;
        std::printf("criterion %d [%s] %s: %s(%.2f s%s)\n", id, ok ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs,
                    limit_s > 0 ? (in_time ? " within limit" : " over limit") : "");
        std::fflush(stdout);
    };

    criterion(1, "cartan calculus", 60, [] { return run_suites_for({"cartan"}, {"poly", "trig"}, 1800); });
    criterion(2, "leibniz structure", 0, [] { return run_suites_for({"leibniz"}, {"poly", "trig"}, 1100); });
    criterion(3, "perfectness witnesses", 0, [] { return run_suites_for({"perfect"}, {"poly"}, 200); });
    criterion(4, "ideal of squares witnesses", 0, [] { return run_suites_for({"squares"}, {"poly"}, 200); });
    criterion(5, "dimension table and equivariance", 300, [] { return run_suites_for({"rep"}, {"poly"}, 1); });
    criterion(6, "cohomology complexes", 0, [] { return run_suites_for({"coho"}, {"poly"}, 1); });
    criterion(7, "torus central extension", 0, [] { return run_suites_for({"torus"}, {"poly"}, 1201); });
    criterion(8, "factorization through d", 120, [] { return run_suites_for({"ophom"}, {"poly"}, 100); });
    criterion(9, "deterministic verify report", 0, [&] {
        const std::string cmd = "'" + cli + "' verify --seed 1";
        const Captured a = capture(cmd), b = capture(cmd);
        Outcome o;
        o.ok = a.status == 0 && b.status == 0 && a.output == b.output && !a.output.empty();
        o.detail = "exit codes " + std::to_string(a.status) + "/" + std::to_string(b.status) + ", " +
                   std::to_string(a.output.size()) + " bytes, " + (a.output == b.output ? "identical" : "different") + "; ";
        return o;
    });
    return failed == 0 ? 0 : 1;
}
