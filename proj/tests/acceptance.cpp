// Acceptance criteria 1-10, one PASS/FAIL line each.
// Usage: acceptance [--expect-fail 1,6,7]
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "braidforge/braid.hpp"
#include "braidforge/cli.hpp"
#include "braidforge/errors.hpp"
#include "braidforge/invariants.hpp"
#include "braidforge/knotgroup.hpp"
#include "braidforge/markov.hpp"
#include "braidforge/ordercert.hpp"
#include "mutate.hpp"

using namespace braidforge;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

using Clock = std::chrono::steady_clock;

double secs(Clock::time_point a) { return std::chrono::duration<double>(Clock::now() - a).count(); }

std::string K(int w, int t, int b) { return "(" + std::to_string(w) + "," + std::to_string(t) + "," + std::to_string(b) + ")"; }

BraidWord letter(int n, int i) { return BraidWord(n, {i}); }

std::vector<std::array<int, 3>> knot_grid(int maxw, int maxt, bool nontrivial = false) {
    std::vector<std::array<int, 3>> out;
    for (int w = 2; w <= maxw; ++w)
        for (int t = 1; t <= maxt; ++t)
            for (int b = 0; b <= w - 2; ++b) {
                BraidWord br = one_bridge_braid(w, t, b);
                if (closure_components(br) != 1) continue;
                if (nontrivial && positive_closure_genus(br).genus == 0) continue;
                out.push_back({w, t, b});
            }
    return out;
}

Outcome c1() {
    Outcome o;
    int n_checks = 0, literal_bad = 0, alt_ok = 0, alt_n = 0;
    for (int m = 2; m <= 6; ++m) {
        int n = m + 1;
        BraidWord pm = pi_power(m, 1, n);
        for (int i = 1; i <= m - 1; ++i) {
            ++n_checks;
            if (!word_equal(concat(letter(n, i), pm), concat(pm, letter(n, i + 1))))
                o.fail("σ_" + std::to_string(i) + "π_" + std::to_string(m) + " identity");
        }
        ++n_checks;
        if (!word_equal(pi_power(m, m + 1, n), concat(big_pi(m, n), big_pi(m, n)))) o.fail("π^{m+1} = Π² at m=" + std::to_string(m));
        ++n_checks;
        if (!word_equal(concat(letter(n, m), pi_power(m, 2, n)), concat(pi_power(m, 2, n), letter(n, 1))))
            o.fail("σ_mπ_m² identity at m=" + std::to_string(m));
        for (int s = 2; s <= m; ++s) {
            ++n_checks;
            BraidWord lhs = pi_power(m, s, n);
            if (!word_equal(lhs, concat(concat(pi_power(m - 1, s - 1, n), pm), letter(n, s - 1)))) {
                ++literal_bad;
                o.fail("π_m^s = π_{m-1}^{s-1}π_mσ_{s-1} is false for s >= 3");
            }
            BraidWord asc(n, {});
            for (int i = 1; i <= s - 1; ++i) asc.letters.push_back(i);
            ++alt_n;
            alt_ok += word_equal(lhs, concat(concat(pi_power(m - 1, 1, n), pi_power(m, s - 1, n)), letter(n, s - 1))) &&
                        word_equal(lhs, concat(concat(pi_power(m - 1, s - 1, n), pm), asc));
        }
    }
    std::ostringstream d;
    d << n_checks << " identities, " << literal_bad << " false as written; the forms π_{m-1}π_m^{s-1}σ_{s-1} and "
      << "π_{m-1}^{s-1}π_m(σ_1..σ_{s-1}) hold " << alt_ok << "/" << alt_n;
    o.detail = o.ok ? d.str() : o.detail + "; " + d.str();
    return o;
}

Outcome c2() {
    Outcome o;
    struct Case {
        int p, q, l, n;
        int torus;  // T(2,torus) expected, or 0
    };
    std::vector<Case> cases{{2, 3, 2, 2, 5}, {2, 5, 2, 2, 7}, {3, 4, 2, 2, 0}, {3, 5, 2, 2, 0}, {5, 4, 4, 4, 0}};
    std::ostringstream d;
    for (const auto& c : cases) {
        auto t0 = Clock::now();
        try {
            ConversionResult r = ttk_to_one_bridge(c.p, c.q, c.l, c.n);
            if (r.b < 0 || r.b > r.omega - 2 || r.t < 1) o.fail("invalid triple");
            verify_trace(r.trace);
            LaurentPoly a = alexander_from_braid(r.trace.start).normalized();
            LaurentPoly b = alexander_from_braid(one_bridge_braid(r.omega, r.t, r.b)).normalized();
            if (!(a == b)) o.fail("Alexander mismatch for " + K(r.omega, r.t, r.b));
            if (c.torus && !(b == alexander_from_braid(BraidWord(2, std::vector<int>(static_cast<std::size_t>(c.torus), 1))).normalized()))
                o.fail("not T(2," + std::to_string(c.torus) + ")");
            double s = secs(t0);
            if (s >= 5) o.fail("slow case");
            d << "T" << c.p << "," << c.q << "^" << c.l << "," << c.n << "->B" << K(r.omega, r.t, r.b) << "[" << r.condition
              << "] ";
        } catch (const std::exception& e) {
            o.fail(e.what());
        }
    }
    if (o.ok) o.detail = d.str();
    return o;
}

Outcome c3() {
    Outcome o;
    int n = 0;
    for (auto [w, t, b] : knot_grid(6, 6)) {
        ++n;
        if (!(fox_alexander(one_bridge_presentation(w, t, b)).normalized() ==
              alexander_from_braid(one_bridge_braid(w, t, b)).normalized()))
            o.fail("mismatch at " + K(w, t, b));
    }
    if (o.ok) o.detail = std::to_string(n) + " knots, Fox = Burau";
    return o;
}

bool is_suffix(const GroupWord& s, const GroupWord& w) {
    return s.size() <= w.size() && std::equal(s.letters.begin(), s.letters.end(), w.letters.end() - static_cast<long>(s.size()));
}

Outcome c4() {
    Outcome o;
    int n = 0;
    for (auto [w, t, b] : knot_grid(6, 6)) {
        ++n;
        std::string k = K(w, t, b);
        GammaData d = gamma_word(w, t, b);
        GroupWord yg = d.y() * d.g0;
        for (int i = 0; i <= t; ++i)
            if (!is_suffix(d.g(i), yg)) o.fail("g_i not a suffix at " + k);
        for (int j = 1; j <= w; ++j)
            if (!is_suffix(d.h(j), yg)) o.fail("h_j not a suffix at " + k);
        if (exponent_sum(d.g0, intern(d.x_name)) != b || exponent_sum(d.g0, intern(d.y_name)) != w - b - 1 ||
            static_cast<int>(d.g0.size()) != w - 1)
            o.fail("letter counts at " + k);
        for (int i = 1; i <= t; ++i)
            if (d.g(i) != d.h((i - 1) % w + 1)) o.fail("g_i != h_j at " + k);
        Presentation p = one_bridge_presentation(w, t, b);
        Abelianization ab = abelianization(p, {p.peripheral("mu"), p.peripheral("lambda")});
        if (ab.invariant_factors != std::vector<long long>{0}) o.fail("H1 is not Z at " + k);
        else if (std::abs(ab.probe_images[0][0]) != 1 || ab.probe_images[1][0] != 0) o.fail("peripheral images at " + k);
    }
    if (o.ok) o.detail = std::to_string(n) + " knots";
    return o;
}

Outcome c5() {
    Outcome o;
    int n = 0, m = 0;
    for (int w = 2; w <= 6; ++w)
        for (int t = 1; t <= 6; ++t)
            for (int b = 0; b <= w - 2; ++b) {
                BraidWord br = one_bridge_braid(w, t, b);
                if (closure_components(br) != 1) continue;
                ++n;
                GenusInfo g = positive_closure_genus(br);
                if (g.slope_threshold != w * t + b - t - w) o.fail("slope threshold at " + K(w, t, b));
                LaurentPoly a = alexander_from_braid(br).normalized();
                if (a.span() != 2 * g.genus) o.fail("span != 2g at " + K(w, t, b));
            }
    std::mt19937 rng(5);
    for (int k = 0; k < 300; ++k) {
        int s = 2 + static_cast<int>(rng() % 5);
        BraidWord br(s, {});
        int len = static_cast<int>(rng() % 14);
        for (int i = 0; i < len; ++i) br.letters.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(s - 1)));
        if (closure_components(br) != 1) continue;
        // every generator must occur, otherwise the closure splits
        std::set<int> used(br.letters.begin(), br.letters.end());
        if (static_cast<int>(used.size()) != s - 1) continue;
        ++m;
        if (alexander_from_braid(br).normalized().span() != 2 * positive_closure_genus(br).genus)
            o.fail("span != 2g for " + to_string(br));
    }
    if (o.ok) o.detail = std::to_string(n) + " grid knots, " + std::to_string(m) + " random positive braid knots";
    return o;
}

std::string branch(int w, int t, int b) {
    if (t == 1) return "t=1";
    GammaData d = gamma_word(w, t, b);
    std::size_t l = d.g(1).size();
    int bl = 0;
    for (int i = 1; i <= t; ++i) bl += d.g(i).size() == l;
    return t > bl ? "t>b_l" : "t=b_l>1";
}

Outcome c6() {
    Outcome o;
    std::map<std::string, int> seen;
    std::size_t biggest = 0;
    int n = 0;
    for (auto [w, t, b] : knot_grid(5, 5, true)) {
        ++n;
        try {
            Certificate c = property_d_certificate(w, t, b);
            Presentation p = one_bridge_presentation(w, t, b);
            int g = positive_closure_genus(one_bridge_braid(w, t, b)).genus;
            GroupWord mu = p.peripheral("mu");
            check_certificate(p, {inverse(mu), power(mu, 2 * g - 1) * p.peripheral("lambda")}, mu, c);
            biggest = std::max(biggest, c.nodes.size());
            seen[branch(w, t, b)]++;
        } catch (const std::exception& e) {
            o.fail(K(w, t, b) + ": " + e.what());
        }
    }
    std::ostringstream d;
    d << n << " knots accepted, max " << biggest << " nodes; branches";
    for (auto& [k, v] : seen) d << " " << k << ":" << v;
    for (const char* need : {"t>b_l", "t=b_l>1", "t=1"})
        if (!seen.count(need)) {
            o.fail(std::string("no instance of the ") + need + " branch");
            d << "; " << need << " has no knot instance (all g_i equal would need t marks in one pass)";
        }
    o.detail = o.ok ? d.str() : o.detail + "; " + d.str();
    return o;
}

Outcome c7() {
    Outcome o;
    Presentation K23 = one_bridge_presentation(2, 3, 0);
    Certificate kc = property_d_certificate(2, 3, 0);
    std::ostringstream d;
    auto accept = [&](const Presentation& comp, const Certificate& cc, int gK, int w, int t, int b) -> bool {
        try {
            Certificate c = satellite_certificate(cc, comp, gK, w, t, b);
            Presentation P = satellite_presentation(comp, w, t, b);
            int gP = positive_closure_genus(one_bridge_braid(w, t, b)).genus;
            GroupWord mu = P.peripheral("mu");
            check_certificate(P, {inverse(mu), power(mu, 2 * gP + 2 * w * gK - 1) * P.peripheral("lambda")}, mu, c);
            d << K(w, t, b) << " ok (" << c.nodes.size() << " nodes); ";
            return true;
        } catch (const std::exception& e) {
            o.fail(K(w, t, b) + ": " + e.what());
            d << K(w, t, b) << " " << e.what() << "; ";
            return false;
        }
    };
    for (auto [w, t, b] : std::vector<std::array<int, 3>>{{3, 4, 1}, {3, 5, 0}, {4, 7, 2}}) accept(K23, kc, 1, w, t, b);
    // doubly iterated: trefoil, then (3,5,0) of genus 4 + 3 = 7, then (2,27,0)
    try {
        Certificate s1 = satellite_certificate(kc, K23, 1, 3, 5, 0);
        Presentation P1 = satellite_presentation(K23, 3, 5, 0);
        d << "iterated ";
        accept(P1, s1, 7, 2, 27, 0);
    } catch (const std::exception& e) {
        o.fail(std::string("iterated: ") + e.what());
    }
    try {
        satellite_certificate(kc, K23, 1, 3, 2, 1);
        o.fail("(3,2,1) accepted");
    } catch (const DomainError&) {
        d << "(3,2,1) DomainError";
    } catch (const std::exception& e) {
        o.fail(std::string("(3,2,1) wrong error: ") + e.what());
    }
    o.detail = o.ok ? d.str() : o.detail + " | " + d.str();
    return o;
}

Outcome c8() {
    Outcome o;
    auto t0 = Clock::now();
    V2503Bundle v = v2503_bundle();
    for (const auto& c : v.checks)
        if (!c.ok) o.fail(c.name + ": " + c.detail);
    GroupWord lambda = v.presentation.peripheral("lambda");
    try {
        check_certificate(v.presentation, {inverse(lambda)}, lambda, v.lambda_certificate);
    } catch (const std::exception& e) {
        o.fail(e.what());
    }
    if (secs(t0) >= 5) o.fail("slower than 5 s");
    if (o.ok) o.detail = std::to_string(v.checks.size()) + " named checks";
    return o;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

Outcome c9(const std::string& data) {
    Outcome o;
    std::filesystem::path g = std::filesystem::path(data) / "golden";
    auto tmp = std::filesystem::temp_directory_path() / ("braidforge_acc_" + std::to_string(::getpid()));
    std::filesystem::create_directories(tmp);
    std::vector<std::pair<std::filesystem::path, std::filesystem::path>> certs;  // cert, pres
    std::vector<std::filesystem::path> traces;
    for (const auto& e : std::filesystem::directory_iterator(g)) {
        std::string n = e.path().filename().string();
        if (n.rfind("trace_", 0) == 0) traces.push_back(e.path());
        if (n.size() > 10 && n.substr(n.size() - 10) == ".cert.json")
            certs.push_back({e.path(), g / (n.substr(0, n.size() - 10) + ".pres.json")});
    }
    certs.push_back({g / "v2503_certificate.json", g / "v2503_presentation.json"});
    std::sort(traces.begin(), traces.end());
    std::sort(certs.begin(), certs.end());
    if (traces.empty() || certs.size() < 2) {
        o.fail("golden data missing in " + g.string());
        return o;
    }
    std::mt19937 rng(31337);
    int tried = 0, exit0 = 0, other = 0;
    std::ostringstream sink;
    auto verify = [&](std::vector<std::string> args) {
        std::ostringstream out, err;
        return cli::run(args, out, err);
    };
    while (tried < 1200) {
        bool cert = tried % 2 == 0;
        std::filesystem::path f = tmp / "m.json";
        std::vector<std::string> args{"verify", f.string()};
        if (cert) {
            auto& [cp, pp] = certs[static_cast<std::size_t>(tried / 2) % certs.size()];
            Presentation pres = presentation_from_json(nlohmann::json::parse(slurp(pp)));
            Certificate c = certificate_from_json(nlohmann::json::parse(slurp(cp)));
            Certificate m = c;
            if (!fuzz::mutate(m, pres, rng)) continue;
            std::ofstream(f) << to_json(m).dump();
            args.push_back("--pres");
            args.push_back(pp.string());
        } else {
            MoveTrace tr = trace_from_json(nlohmann::json::parse(slurp(traces[static_cast<std::size_t>(tried / 2) % traces.size()])));
            MoveTrace m = tr;
            if (!fuzz::mutate(m, rng)) continue;
            std::ofstream(f) << to_json(m).dump();
        }
        ++tried;
        int code = verify(args);
        if (code == 0) ++exit0;
        else if (code != 1) ++other;
    }
    if (exit0) o.fail(std::to_string(exit0) + " mutations accepted");
    if (other) o.fail(std::to_string(other) + " mutations gave an exit code other than 1");

    // random Markov moves
    int moves = 0, changed = 0;
    for (auto [w, t, b] : std::vector<std::array<int, 3>>{{2, 3, 0}, {3, 4, 0}, {3, 2, 0}, {5, 3, 2}, {4, 5, 0}}) {
        const BraidWord start = one_bridge_braid(w, t, b);
        BraidWord cur = start;
        LaurentPoly ref = alexander_from_braid(cur).normalized();
        for (int k = 0; k < 220; ++k) {
            if (cur.size() > 24) cur = start;
            int n = cur.strands;
            auto rl = [&] { return (1 + static_cast<int>(rng() % static_cast<unsigned>(std::max(1, n - 1)))) * (rng() % 2 ? 1 : -1); };
            int L = static_cast<int>(cur.size());
            Move mv;
            switch (rng() % 8) {
                case 0: mv = Move::braid_relation(static_cast<int>(rng() % static_cast<unsigned>(L + 1))); break;
                case 1: mv = Move::far_commute(static_cast<int>(rng() % static_cast<unsigned>(L + 1))); break;
                case 2: mv = Move::free_cancel(static_cast<int>(rng() % static_cast<unsigned>(L + 1))); break;
                case 3: mv = Move::free_insert(static_cast<int>(rng() % static_cast<unsigned>(L + 1)), rl()); break;
                case 4: mv = Move::conjugate({rl()}); break;
                case 5: mv = n < 6 ? (rng() % 2 ? Move::stabilize_pos() : Move::stabilize_neg()) : Move::destabilize(); break;
                default: mv = Move::destabilize(); break;
            }
            try {
                cur = apply_move(cur, mv);
            } catch (const MoveError&) {
                --k;
                continue;
            }
            ++moves;
            if (!(alexander_from_braid(cur).normalized() == ref)) ++changed;
        }
    }
    if (changed) o.fail(std::to_string(changed) + " Markov moves changed the Alexander polynomial");
    std::ostringstream d;
    d << tried << " mutations of " << certs.size() << " certificates and " << traces.size() << " traces: " << tried - exit0 - other
      << " exit 1; " << moves << " Markov moves, Alexander unchanged " << moves - changed;
    o.detail = o.ok ? d.str() : o.detail + "; " + d.str();
    std::filesystem::remove_all(tmp);
    return o;
}

Outcome c10() {
    Outcome o;
    auto t0 = Clock::now();
    int n = 0;
    for (int p = 3; p <= 50; ++p)
        for (int q = 3; q <= 50; ++q) {
            if (std::gcd(p, q) != 1) continue;
            ++n;
            CoprimeInverses c = coprime_inverses(p, q);
            if ((static_cast<long>(p) * c.x) % q != 1 % q || (static_cast<long>(q) * c.y) % p != 1 % p) o.fail("not inverses");
            if (!(2 * c.x < q || 2 * c.y < p)) o.fail("x < q/2 or y < p/2 fails at " + std::to_string(p) + "," + std::to_string(q));
        }
    if (secs(t0) >= 1) o.fail("slower than 1 s");
    if (o.ok) o.detail = std::to_string(n) + " coprime pairs";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::string expect;
    std::string data = BRAIDFORGE_DATA_DIR;
    app.add_option("--expect-fail", expect, "comma separated criteria known to fail");
    app.add_option("--data", data);
    CLI11_PARSE(app, argc, argv);
    std::set<int> expected;
    std::stringstream es(expect);
    for (std::string tok; std::getline(es, tok, ',');)
        if (!tok.empty()) expected.insert(std::stoi(tok));

    std::vector<std::function<Outcome()>> crit{c1, c2, c3, c4, c5, c6, c7, c8, [&] { return c9(data); }, c10};
    int unexpected = 0;
    for (std::size_t i = 0; i < crit.size(); ++i) {
        int id = static_cast<int>(i) + 1;
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = crit[i]();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2fs", secs(t0));
        std::cout << "criterion " << id << ": " << (o.ok ? "PASS" : "FAIL") << " [" << buf << "] " << o.detail;
        if (!o.ok && expected.count(id)) std::cout << " (expected)";
        std::cout << std::endl;
        if (!o.ok && !expected.count(id)) ++unexpected;
    }
    return unexpected ? 1 : 0;
}
