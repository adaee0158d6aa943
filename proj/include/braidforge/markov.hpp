#pragma once

#include <string>
#include <vector>

#include "braidforge/braid.hpp"

namespace braidforge {

enum class MoveKind {
    BraidRelationAt,
    FarCommuteAt,
    FreeCancelAt,
    FreeInsertAt,
    ConjugateBy,
    StabilizePos,
    StabilizeNeg,
    Destabilize,
    CoarseEquality,
};

const char* move_kind_name(MoveKind k);

struct Move {
    MoveKind kind = MoveKind::CoarseEquality;
    int pos = 0;
    int letter = 0;              // FreeInsertAt
    std::vector<int> word;       // ConjugateBy
    BraidWord target;            // CoarseEquality

    static Move braid_relation(int pos) { return {MoveKind::BraidRelationAt, pos, 0, {}, {}}; }
    static Move far_commute(int pos) { return {MoveKind::FarCommuteAt, pos, 0, {}, {}}; }
    static Move free_cancel(int pos) { return {MoveKind::FreeCancelAt, pos, 0, {}, {}}; }
    static Move free_insert(int pos, int letter) { return {MoveKind::FreeInsertAt, pos, letter, {}, {}}; }
    static Move conjugate(std::vector<int> g) { return {MoveKind::ConjugateBy, 0, 0, std::move(g), {}}; }
    static Move stabilize_pos() { return {MoveKind::StabilizePos, 0, 0, {}, {}}; }
    static Move stabilize_neg() { return {MoveKind::StabilizeNeg, 0, 0, {}, {}}; }
    static Move destabilize() { return {MoveKind::Destabilize, 0, 0, {}, {}}; }
    static Move coarse(BraidWord target) { return {MoveKind::CoarseEquality, 0, 0, {}, std::move(target)}; }
    bool operator==(const Move&) const = default;
};

struct MoveTrace {
    BraidWord start;
    std::vector<Move> steps;
    BraidWord end;
    bool operator==(const MoveTrace&) const = default;
};

bool word_equal(const BraidWord& u, const BraidWord& v);

// Throws MoveError when the move does not apply.
BraidWord apply_move(const BraidWord& w, const Move& mv);

// g w g^{-1}, cancelling only across the two junctions.
BraidWord conjugate_reduced(const BraidWord& w, const std::vector<int>& g);

// Throws TraceError naming the first failing step.
void verify_trace(const MoveTrace& tr);

struct ConversionResult {
    int omega = 0;
    int t = 0;
    int b = 0;
    std::string condition;  // a | b | c | d
    MoveTrace trace;
};

ConversionResult ttk_to_one_bridge(int p, int q, int l, int n);

struct CoprimeInverses {
    int x = 0;  // p^{-1} mod q
    int y = 0;  // q^{-1} mod p
};
CoprimeInverses coprime_inverses(int p, int q);

nlohmann::json to_json(const Move& m);
Move move_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MoveTrace& tr);
MoveTrace trace_from_json(const nlohmann::json& j);

}  // namespace braidforge
