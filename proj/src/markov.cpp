#include "braidforge/markov.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "braidforge/errors.hpp"
#include "braidforge/garside.hpp"

namespace braidforge {

const char* move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::BraidRelationAt: return "BraidRelationAt";
        case MoveKind::FarCommuteAt: return "FarCommuteAt";
        case MoveKind::FreeCancelAt: return "FreeCancelAt";
        case MoveKind::FreeInsertAt: return "FreeInsertAt";
        case MoveKind::ConjugateBy: return "ConjugateBy";
        case MoveKind::StabilizePos: return "StabilizePos";
        case MoveKind::StabilizeNeg: return "StabilizeNeg";
        case MoveKind::Destabilize: return "Destabilize";
        case MoveKind::CoarseEquality: return "CoarseEquality";
    }
    return "?";
}

bool word_equal(const BraidWord& u, const BraidWord& v) {
    if (u.strands != v.strands)
        throw DomainError("word_equal: strand counts differ (" + std::to_string(u.strands) + " vs " +
                          std::to_string(v.strands) + ")");
    if (u.letters == v.letters) return true;
    return garside_normal_form(u) == garside_normal_form(v);
}

BraidWord conjugate_reduced(const BraidWord& w, const std::vector<int>& g) {
    for (int x : g)
        if (x == 0 || std::abs(x) > w.strands - 1) throw MoveError("ConjugateBy: letter " + std::to_string(x) + " out of range");
    std::vector<int> out(g.begin(), g.end());
    std::size_t i = 0;
    while (i < w.letters.size() && !out.empty() && out.back() == -w.letters[i]) {
        out.pop_back();
        ++i;
    }
    out.insert(out.end(), w.letters.begin() + static_cast<long>(i), w.letters.end());
    std::vector<int> tail;
    for (auto it = g.rbegin(); it != g.rend(); ++it) tail.push_back(-*it);
    std::size_t j = 0;
    while (j < tail.size() && !out.empty() && out.back() == -tail[j]) {
        out.pop_back();
        ++j;
    }
    out.insert(out.end(), tail.begin() + static_cast<long>(j), tail.end());
    BraidWord r;
    r.strands = w.strands;
    r.letters = std::move(out);
    return r;
}

namespace {

[[noreturn]] void move_fail(const Move& mv, const std::string& why) {
    std::ostringstream os;
    os << move_kind_name(mv.kind) << " at position " << mv.pos << ": " << why;
    throw MoveError(os.str());
}

}  // namespace

BraidWord apply_move(const BraidWord& w, const Move& mv) {
    validate(w);
    BraidWord r = w;
    auto& L = r.letters;
    const int len = static_cast<int>(L.size());
    switch (mv.kind) {
        case MoveKind::BraidRelationAt: {
            if (mv.pos < 0 || mv.pos + 2 >= len) move_fail(mv, "needs three letters");
            int a = L[mv.pos], b = L[mv.pos + 1], c = L[mv.pos + 2];
            if (a != c || (a > 0) != (b > 0) || std::abs(std::abs(a) - std::abs(b)) != 1)
                move_fail(mv, "letters do not form σ_iσ_{i±1}σ_i with equal signs");
            L[mv.pos] = b;
            L[mv.pos + 1] = a;
            L[mv.pos + 2] = b;
            return r;
        }
        case MoveKind::FarCommuteAt: {
            if (mv.pos < 0 || mv.pos + 1 >= len) move_fail(mv, "needs two letters");
            if (std::abs(std::abs(L[mv.pos]) - std::abs(L[mv.pos + 1])) < 2) move_fail(mv, "generators are adjacent");
            std::swap(L[mv.pos], L[mv.pos + 1]);
            return r;
        }
        case MoveKind::FreeCancelAt: {
            if (mv.pos < 0 || mv.pos + 1 >= len) move_fail(mv, "needs two letters");
            if (L[mv.pos] != -L[mv.pos + 1]) move_fail(mv, "letters are not inverse");
            L.erase(L.begin() + mv.pos, L.begin() + mv.pos + 2);
            return r;
        }
        case MoveKind::FreeInsertAt: {
            if (mv.pos < 0 || mv.pos > len) move_fail(mv, "position out of range");
            if (mv.letter == 0 || std::abs(mv.letter) > w.strands - 1) move_fail(mv, "letter out of range");
            L.insert(L.begin() + mv.pos, {mv.letter, -mv.letter});
            return r;
        }
        case MoveKind::ConjugateBy:
            try {
                return conjugate_reduced(w, mv.word);
            } catch (const MoveError& e) {
                move_fail(mv, e.what());
            }
        case MoveKind::StabilizePos:
        case MoveKind::StabilizeNeg:
            L.push_back(mv.kind == MoveKind::StabilizePos ? w.strands : -w.strands);
            r.strands = w.strands + 1;
            return r;
        case MoveKind::Destabilize: {
            const int top = w.strands - 1;
            if (top < 1) move_fail(mv, "no strand to remove");
            if (L.empty() || std::abs(L.back()) != top) move_fail(mv, "last letter is not σ_{n-1}^{±1}");
            int count = 0;
            for (int x : L) count += std::abs(x) == top;
            if (count != 1) move_fail(mv, "σ_{n-1} occurs " + std::to_string(count) + " times");
            L.pop_back();
            r.strands = w.strands - 1;
            return r;
        }
        case MoveKind::CoarseEquality: {
            if (mv.target.strands != w.strands) move_fail(mv, "target strand count differs");
            validate(mv.target);
            if (!word_equal(w, mv.target)) move_fail(mv, "target is not equal in the braid group");
            return mv.target;
        }
    }
    move_fail(mv, "unknown move");
}

void verify_trace(const MoveTrace& tr) {
    BraidWord cur = tr.start;
    try {
        validate(cur);
    } catch (const DomainError& e) {
        throw TraceError(std::string("start word invalid: ") + e.what());
    }
    for (std::size_t i = 0; i < tr.steps.size(); ++i) {
        try {
            cur = apply_move(cur, tr.steps[i]);
        } catch (const Error& e) {
            throw TraceError("step " + std::to_string(i) + ": " + e.what());
        }
    }
    if (!(cur == tr.end))
        throw TraceError("replay ends at " + to_string(cur) + " but trace claims " + to_string(tr.end));
}

CoprimeInverses coprime_inverses(int p, int q) {
    if (p < 3 || q < 3) throw DomainError("coprime_inverses: need p, q >= 3");
    if (std::gcd(p, q) != 1) throw DomainError("coprime_inverses: gcd(" + std::to_string(p) + "," + std::to_string(q) + ") != 1");
    CoprimeInverses r;
    for (int x = 0; x < q; ++x)
        if ((static_cast<long>(p) * x) % q == 1 % q) r.x = x;
    for (int y = 0; y < p; ++y)
        if ((static_cast<long>(q) * y) % p == 1 % p) r.y = y;
    if (!(2 * r.x < q || 2 * r.y < p)) throw InternalInvariantViolation("coprime_inverses: bound x < q/2 or y < p/2 fails");
    return r;
}

nlohmann::json to_json(const Move& m) {
    nlohmann::json j;
    j["kind"] = move_kind_name(m.kind);
    switch (m.kind) {
        case MoveKind::BraidRelationAt:
        case MoveKind::FarCommuteAt:
        case MoveKind::FreeCancelAt: j["pos"] = m.pos; break;
        case MoveKind::FreeInsertAt:
            j["pos"] = m.pos;
            j["letter"] = m.letter;
            break;
        case MoveKind::ConjugateBy: j["word"] = m.word; break;
        case MoveKind::CoarseEquality: j["target"] = to_json(m.target); break;
        default: break;
    }
    return j;
}

Move move_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) throw DomainError("move needs a string 'kind'");
    const std::string k = j["kind"].get<std::string>();
    auto geti = [&](const char* f) {
        if (!j.contains(f) || !j[f].is_number_integer()) throw DomainError(k + " needs integer '" + f + "'");
        return j[f].get<int>();
    };
    if (k == "BraidRelationAt") return Move::braid_relation(geti("pos"));
    if (k == "FarCommuteAt") return Move::far_commute(geti("pos"));
    if (k == "FreeCancelAt") return Move::free_cancel(geti("pos"));
    if (k == "FreeInsertAt") return Move::free_insert(geti("pos"), geti("letter"));
    if (k == "StabilizePos") return Move::stabilize_pos();
    if (k == "StabilizeNeg") return Move::stabilize_neg();
    if (k == "Destabilize") return Move::destabilize();
    if (k == "ConjugateBy") {
        if (!j.contains("word") || !j["word"].is_array()) throw DomainError("ConjugateBy needs 'word'");
        std::vector<int> g;
        for (const auto& x : j["word"]) {
            if (!x.is_number_integer()) throw DomainError("ConjugateBy letters must be integers");
            g.push_back(x.get<int>());
        }
        return Move::conjugate(g);
    }
    if (k == "CoarseEquality") {
        if (!j.contains("target")) throw DomainError("CoarseEquality needs 'target'");
        return Move::coarse(braid_from_json(j["target"]));
    }
    throw DomainError("unknown move kind '" + k + "'");
}

nlohmann::json to_json(const MoveTrace& tr) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& m : tr.steps) steps.push_back(to_json(m));
    return {{"start", to_json(tr.start)}, {"steps", steps}, {"end", to_json(tr.end)}};
}

MoveTrace trace_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("start") || !j.contains("steps") || !j.contains("end") || !j["steps"].is_array())
        throw DomainError("trace JSON needs 'start', 'steps' (array) and 'end'");
    MoveTrace tr;
    tr.start = braid_from_json(j["start"]);
    tr.end = braid_from_json(j["end"]);
    for (const auto& s : j["steps"]) tr.steps.push_back(move_from_json(s));
    return tr;
}

}  // namespace braidforge
