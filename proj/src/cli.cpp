#include "braidforge/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "braidforge/braid.hpp"
#include "braidforge/errors.hpp"
#include "braidforge/invariants.hpp"
#include "braidforge/knotgroup.hpp"
#include "braidforge/markov.hpp"
#include "braidforge/ordercert.hpp"

namespace braidforge::cli {

namespace {

using json = nlohmann::json;

enum class Level { Quiet, Info, Debug };

struct Ctx {
    std::ostream& out;
    std::ostream& err;
    Level level = Level::Quiet;

    void info(const std::string& m) const {
        if (level != Level::Quiet) err << "info: " << m << "\n";
    }
    void debug(const std::string& m) const {
        if (level == Level::Debug) err << "debug: " << m << "\n";
    }
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Level log_level(std::ostream& err) {
    const char* v = std::getenv("BRAIDFORGE_LOG");
    if (!v) return Level::Quiet;
    std::string s = v;
    if (s == "quiet" || s.empty()) return Level::Quiet;
    if (s == "info") return Level::Info;
    if (s == "debug") return Level::Debug;
    err << "warning: BRAIDFORGE_LOG must be quiet, info or debug; using quiet\n";
    return Level::Quiet;
}

json read_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open " + path);
    try {
        return json::parse(f);
    } catch (const json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void write_json(const std::string& path, const json& j) {
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << j.dump(2) << "\n";
}

std::string triple(int w, int t, int b) {
    return "B(" + std::to_string(w) + "," + std::to_string(t) + "," + std::to_string(b) + ")";
}

// Schema problems surface as json or DomainError exceptions; both are usage errors.
template <class F>
auto parse_schema(const std::string& what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw UsageError(what + ": " + e.what());
    } catch (const DomainError& e) {
        throw UsageError(what + ": " + e.what());
    }
}

int cmd_convert(const Ctx& c, int p, int q, int l, int n, const std::string& out_path) {
    ConversionResult r = ttk_to_one_bridge(p, q, l, n);
    c.info("condition (" + r.condition + "), " + std::to_string(r.trace.steps.size()) + " moves");
    verify_trace(r.trace);
    const BraidWord& src = r.trace.start;
    BraidWord dst = one_bridge_braid(r.omega, r.t, r.b);
    bool same = alexander_from_braid(src).normalized() == alexander_from_braid(dst).normalized();
    c.out << triple(r.omega, r.t, r.b) << " alexander=" << (same ? "consistent" : "inconsistent") << "\n";
    if (!out_path.empty()) {
        json j = to_json(r.trace);
        write_json(out_path, j);
        c.info("trace written to " + out_path);
    }
    return same ? Ok : Internal;
}

int cmd_verify(const Ctx& c, const std::string& path, const std::string& pres_path) {
    json j = read_json(path);
    if (j.is_object() && j.contains("nodes")) {
        if (pres_path.empty()) throw UsageError("certificate verification needs --pres");
        Presentation pres = parse_schema(pres_path, [&] { return presentation_from_json(read_json(pres_path)); });
        Certificate cert = parse_schema(path, [&] { return certificate_from_json(j); });
        c.debug(std::to_string(cert.nodes.size()) + " nodes");
        check_certificate(pres, cert.S, cert.target, cert);
        std::string S;
        for (const auto& s : cert.S) S += (S.empty() ? "" : ", ") + to_string(s);
        c.out << "ok: " << to_string(cert.target) << " in M({" << S << "}), " << cert.nodes.size() << " nodes\n";
        return Ok;
    }
    if (j.is_object() && j.contains("steps")) {
        MoveTrace tr = parse_schema(path, [&] { return trace_from_json(j); });
        verify_trace(tr);
        c.out << "ok: trace " << to_string(tr.start) << " -> " << to_string(tr.end) << ", " << tr.steps.size()
              << " moves\n";
        return Ok;
    }
    throw UsageError(path + ": neither a certificate nor a trace");
}

// (ω,t,b) whose braid is literally w, if any
bool match_one_bridge(const BraidWord& w, int& omega, int& t, int& b) {
    omega = w.strands;
    for (t = 1; t <= static_cast<int>(w.size()); ++t)
        for (b = 0; b <= omega - 2; ++b)
            if (one_bridge_braid(omega, t, b) == w) return true;
    return false;
}

int cmd_report(const Ctx& c, const std::string& path, bool pres, bool alex, bool genus) {
    BraidWord w = parse_schema(path, [&] { return braid_from_json(read_json(path)); });
    validate(w);
    json rep;
    rep["braid"] = to_json(w);
    rep["components"] = closure_components(w);
    if (alex) rep["alexander"] = alexander_from_braid(w).normalized().to_string();
    if (genus) {
        if (closure_components(w) != 1) throw NotAKnot("closure has " + std::to_string(closure_components(w)) + " components");
        GenusInfo g = positive_closure_genus(w);
        rep["genus"] = g.genus;
        rep["slope_threshold"] = g.slope_threshold;
    }
    if (pres) {
        int omega = 0, t = 0, b = 0;
        if (!match_one_bridge(w, omega, t, b)) throw UsageError("--presentation needs a braid of the form B(ω,t,b)");
        c.info("recognised " + triple(omega, t, b));
        rep["presentation"] = to_json(one_bridge_presentation(omega, t, b));
        rep["one_bridge"] = {omega, t, b};
    }
    c.out << rep.dump(2) << "\n";
    return Ok;
}

int cmd_cert_gen(const Ctx& c, const std::vector<int>& one, const std::vector<int>& comp,
                 const std::vector<std::vector<int>>& patterns, const std::string& out_path,
                 const std::string& pres_out) {
    Presentation pres;
    Certificate cert;
    if (!one.empty()) {
        if (!comp.empty() || !patterns.empty()) throw UsageError("--one-bridge excludes --companion/--pattern");
        cert = property_d_certificate(one[0], one[1], one[2]);
        pres = one_bridge_presentation(one[0], one[1], one[2]);
        c.info("property (D) certificate for " + triple(one[0], one[1], one[2]));
    } else {
        if (comp.empty() || patterns.empty()) throw UsageError("give --one-bridge, or --companion with --pattern");
        cert = property_d_certificate(comp[0], comp[1], comp[2]);
        pres = one_bridge_presentation(comp[0], comp[1], comp[2]);
        int g = positive_closure_genus(one_bridge_braid(comp[0], comp[1], comp[2])).genus;
        for (const auto& p : patterns) {
            if (p.size() != 3) throw UsageError("--pattern takes ω t b");
            c.info("satellite with pattern " + triple(p[0], p[1], p[2]) + ", companion genus " + std::to_string(g));
            cert = satellite_certificate(cert, pres, g, p[0], p[1], p[2]);
            pres = satellite_presentation(pres, p[0], p[1], p[2]);
            g = positive_closure_genus(one_bridge_braid(p[0], p[1], p[2])).genus + p[0] * g;
        }
    }
    c.out << "certificate: " << cert.nodes.size() << " nodes, target " << to_string(cert.target) << "\n";
    if (out_path.empty())
        c.out << to_json(cert).dump(2) << "\n";
    else
        write_json(out_path, to_json(cert));
    if (!pres_out.empty()) write_json(pres_out, to_json(pres));
    return Ok;
}

int cmd_v2503(const Ctx& c, const std::string& dir) {
    V2503Bundle v = v2503_bundle();
    bool ok = true;
    for (const auto& ch : v.checks) {
        c.out << (ch.ok ? "PASS " : "FAIL ") << ch.name << ": " << ch.detail << "\n";
        ok = ok && ch.ok;
    }
    if (!dir.empty()) {
        std::filesystem::create_directories(dir);
        write_json(dir + "/v2503_presentation.json", to_json(v.presentation));
        write_json(dir + "/v2503_certificate.json", to_json(v.lambda_certificate));
        write_json(dir + "/v2503_filled_presentation.json", to_json(v.filled));
        json w;
        w["mu_inverse"] = witness_to_json(v.mu_inverse_witness);
        w["fill_a2ba2_eq_b"] = witness_to_json(v.fill_b_witness);
        w["fill_a2_eq_1"] = witness_to_json(v.fill_a2_witness);
        write_json(dir + "/v2503_witnesses.json", w);
        c.info("bundle written to " + dir);
    }
    return ok ? Ok : Rejected;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Ctx c{out, err, log_level(err)};
    CLI::App app{"braid and knot group toolkit", "braidforge"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("braidforge ") + kVersion);

    int p = 0, q = 0, l = 0, n = 0;
    std::string out_path, pres_path, file, dir, pres_out;
    bool want_pres = false, want_alex = false, want_genus = false;
    std::vector<int> one, comp;
    std::vector<std::vector<int>> patterns;

    auto* conv = app.add_subcommand("convert", "twisted torus knot to a 1-bridge braid");
    conv->add_option("--p", p)->required();
    conv->add_option("--q", q)->required();
    conv->add_option("--l", l)->required();
    conv->add_option("--n", n)->required();
    conv->add_option("--out", out_path, "trace file");

    auto* ver = app.add_subcommand("verify", "replay a trace or check a certificate");
    ver->add_option("file", file)->required();
    ver->add_option("--pres", pres_path, "presentation for a certificate");

    auto* rep = app.add_subcommand("report", "invariants of a braid closure");
    rep->add_option("--braid", file)->required();
    rep->add_flag("--presentation", want_pres);
    rep->add_flag("--alexander", want_alex);
    rep->add_flag("--genus", want_genus);

    auto* gen = app.add_subcommand("cert-gen", "property (D) or satellite certificates");
    gen->add_option("--one-bridge", one, "ω t b")->expected(3);
    gen->add_option("--companion", comp, "ω t b")->expected(3);
    gen->add_option("--pattern", patterns, "ω t b (repeat to iterate)")->expected(3);
    gen->add_option("--out", out_path);
    gen->add_option("--pres-out", pres_out);

    auto* v25 = app.add_subcommand("v2503", "run the v2503 checks");
    v25->add_option("--out-dir", dir);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return Usage;
    }

    out << "# braidforge " << kVersion << "\n";
    try {
        if (*conv) return cmd_convert(c, p, q, l, n, out_path);
        if (*ver) return cmd_verify(c, file, pres_path);
        if (*rep) return cmd_report(c, file, want_pres, want_alex, want_genus);
        if (*gen) return cmd_cert_gen(c, one, comp, patterns, out_path, pres_out);
        if (*v25) return cmd_v2503(c, dir);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    } catch (const CertError& e) {
        out << "rejected: " << e.what() << "\n";
        return Rejected;
    } catch (const WitnessError& e) {
        out << "rejected: " << e.what() << "\n";
        return Rejected;
    } catch (const TraceError& e) {
        out << "rejected: " << e.what() << "\n";
        return Rejected;
    } catch (const MoveError& e) {
        out << "rejected: " << e.what() << "\n";
        return Rejected;
    } catch (const NotAKnot& e) {
        out << "rejected: " << e.what() << "\n";
        return Rejected;
    } catch (const UnsupportedCase& e) {
        out << "rejected: " << e.what() << "\n";
        return Rejected;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return Internal;
    }
    return Usage;
}

}  // namespace braidforge::cli
