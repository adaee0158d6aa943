#include <map>

#include "braidforge/errors.hpp"
#include "braidforge/ordercert.hpp"

namespace braidforge {

WitnessStep WitnessStep::cancel(int pos) {
    WitnessStep s;
    s.op = WitnessOp::FreeCancel;
    s.pos = pos;
    return s;
}

WitnessStep WitnessStep::insert(int pos, int letter) {
    WitnessStep s;
    s.op = WitnessOp::FreeInsert;
    s.pos = pos;
    s.letter = letter;
    return s;
}

WitnessStep WitnessStep::rel_insert(int relator, bool inverse, int pos) {
    WitnessStep s;
    s.op = WitnessOp::RelatorInsert;
    s.relator = relator;
    s.inverse = inverse;
    s.pos = pos;
    return s;
}

WitnessStep WitnessStep::rel_delete(int relator, bool inverse, int pos) {
    WitnessStep s = rel_insert(relator, inverse, pos);
    s.op = WitnessOp::RelatorDelete;
    return s;
}

namespace {

std::vector<int> relator_letters(const Presentation& pres, int idx, bool inv) {
    if (idx < 0 || idx >= static_cast<int>(pres.relators.size()))
        throw WitnessError("relator index " + std::to_string(idx) + " out of range");
    const GroupWord& r = pres.relators[static_cast<std::size_t>(idx)];
    return inv ? inverse(r).letters : r.letters;
}

int size_of(const std::vector<int>& w) { return static_cast<int>(w.size()); }

}  // namespace

void apply_witness_step(const Presentation& pres, std::vector<int>& w, const WitnessStep& s) {
    int L = size_of(w);
    switch (s.op) {
        case WitnessOp::FreeCancel:
            if (s.pos < 0 || s.pos + 1 >= L) throw WitnessError("cancel position out of range");
            if (w[static_cast<std::size_t>(s.pos)] != -w[static_cast<std::size_t>(s.pos) + 1])
                throw WitnessError("letters at cancel position are not inverse");
            w.erase(w.begin() + s.pos, w.begin() + s.pos + 2);
            return;
        case WitnessOp::FreeInsert: {
            if (s.pos < 0 || s.pos > L) throw WitnessError("insert position out of range");
            if (s.letter == 0) throw WitnessError("insert of empty letter");
            validate_word(pres, {s.letter});
            int pair[2] = {s.letter, -s.letter};
            w.insert(w.begin() + s.pos, pair, pair + 2);
            return;
        }
        case WitnessOp::RelatorInsert: {
            auto r = relator_letters(pres, s.relator, s.inverse);
            if (s.pos < 0 || s.pos > L) throw WitnessError("relator insert position out of range");
            w.insert(w.begin() + s.pos, r.begin(), r.end());
            return;
        }
        case WitnessOp::RelatorDelete: {
            auto r = relator_letters(pres, s.relator, s.inverse);
            int m = size_of(r);
            if (s.pos < 0 || s.pos + m > L) throw WitnessError("relator delete position out of range");
            if (!std::equal(r.begin(), r.end(), w.begin() + s.pos))
                throw WitnessError("relator not found at delete position");
            w.erase(w.begin() + s.pos, w.begin() + s.pos + m);
            return;
        }
    }
}

void check_equality_witness(const Presentation& pres, const GroupWord& from, const GroupWord& to,
                            const EqualityWitness& wit) {
    std::vector<int> w = from.letters;
    try {
        validate_word(pres, from.letters);
        validate_word(pres, to.letters);
    } catch (const DomainError& e) {
        throw WitnessError(e.what());
    }
    for (std::size_t i = 0; i < wit.size(); ++i) {
        try {
            apply_witness_step(pres, w, wit[i]);
        } catch (const Error& e) {
            throw WitnessError("step " + std::to_string(i) + ": " + e.what() + "; word: " + letters_to_string(w));
        }
    }
    if (w != to.letters)
        throw WitnessError("replay ends at " + letters_to_string(w) + ", expected " + to_string(to));
}

EqualityWitness invert_witness(const Presentation& pres, const GroupWord& from, const EqualityWitness& wit) {
    std::vector<int> w = from.letters;
    EqualityWitness out;
    for (const auto& s : wit) {
        int L = size_of(w);
        WitnessStep r = s;
        switch (s.op) {
            case WitnessOp::FreeCancel: r.pos = L - s.pos - 2; break;
            case WitnessOp::FreeInsert: r.pos = L - s.pos; break;
            case WitnessOp::RelatorInsert:
                r.inverse = !s.inverse;
                r.pos = L - s.pos;
                break;
            case WitnessOp::RelatorDelete:
                r.inverse = !s.inverse;
                r.pos = L - s.pos - size_of(relator_letters(pres, s.relator, s.inverse));
                break;
        }
        apply_witness_step(pres, w, s);
        out.push_back(r);
    }
    return out;
}

EqualityWitness reverse_witness(const Presentation& pres, const GroupWord& from, const EqualityWitness& wit) {
    std::vector<int> w = from.letters;
    EqualityWitness out;
    for (const auto& s : wit) {
        WitnessStep r = s;
        switch (s.op) {
            case WitnessOp::FreeCancel:
                r = WitnessStep::insert(s.pos, w.at(static_cast<std::size_t>(s.pos)));
                break;
            case WitnessOp::FreeInsert: r = WitnessStep::cancel(s.pos); break;
            case WitnessOp::RelatorInsert: r.op = WitnessOp::RelatorDelete; break;
            case WitnessOp::RelatorDelete: r.op = WitnessOp::RelatorInsert; break;
        }
        apply_witness_step(pres, w, s);
        out.push_back(r);
    }
    return EqualityWitness(out.rbegin(), out.rend());
}

EqualityWitness reduce_witness(std::vector<int> w) {
    EqualityWitness out;
    std::size_t i = 0;
    while (i + 1 < w.size()) {
        if (w[i] == -w[i + 1]) {
            out.push_back(WitnessStep::cancel(static_cast<int>(i)));
            w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
            if (i > 0) --i;
        } else {
            ++i;
        }
    }
    return out;
}

EqualityWitness prepend_relator_witness(const Presentation& pres, const GroupWord& from, const GroupWord& c,
                                        int relator, bool inv) {
    EqualityWitness out;
    std::vector<int> w = from.letters;
    for (std::size_t k = 0; k < c.size(); ++k) {
        out.push_back(WitnessStep::insert(static_cast<int>(k), c.letters[k]));
        apply_witness_step(pres, w, out.back());
    }
    out.push_back(WitnessStep::rel_insert(relator, inv, static_cast<int>(c.size())));
    apply_witness_step(pres, w, out.back());
    auto red = reduce_witness(w);
    out.insert(out.end(), red.begin(), red.end());
    return out;
}

namespace {

const std::map<WitnessOp, std::string>& op_names() {
    static const std::map<WitnessOp, std::string> m = {{WitnessOp::FreeCancel, "FreeCancel"},
                                                       {WitnessOp::FreeInsert, "FreeInsert"},
                                                       {WitnessOp::RelatorInsert, "RelatorInsert"},
                                                       {WitnessOp::RelatorDelete, "RelatorDelete"}};
    return m;
}

int get_int(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw DomainError(std::string("missing integer field '") + key + "'");
    return j[key].get<int>();
}

}  // namespace

nlohmann::json to_json(const WitnessStep& s) {
    nlohmann::json j;
    j["op"] = op_names().at(s.op);
    j["pos"] = s.pos;
    if (s.op == WitnessOp::FreeInsert) {
        j["gen"] = symbol_name(letter_id(s.letter));
        j["sign"] = s.letter > 0 ? 1 : -1;
    } else if (s.op != WitnessOp::FreeCancel) {
        j["relator"] = s.relator;
        j["inverse"] = s.inverse;
    }
    return j;
}

nlohmann::json witness_to_json(const EqualityWitness& w) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& s : w) j.push_back(to_json(s));
    return j;
}

EqualityWitness witness_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw DomainError("witness must be an array");
    EqualityWitness out;
    for (const auto& e : j) {
        if (!e.is_object() || !e.contains("op") || !e["op"].is_string()) throw DomainError("witness step needs op");
        std::string op = e["op"].get<std::string>();
        WitnessStep s;
        bool found = false;
        for (const auto& [k, v] : op_names())
            if (v == op) {
                s.op = k;
                found = true;
            }
        if (!found) throw DomainError("unknown witness op '" + op + "'");
        s.pos = get_int(e, "pos");
        if (s.op == WitnessOp::FreeInsert) {
            if (!e.contains("gen") || !e["gen"].is_string()) throw DomainError("FreeInsert needs gen");
            int sign = get_int(e, "sign");
            if (sign != 1 && sign != -1) throw DomainError("FreeInsert sign must be +-1");
            s.letter = make_letter(intern(e["gen"].get<std::string>()), sign);
        } else if (s.op != WitnessOp::FreeCancel) {
            s.relator = get_int(e, "relator");
            if (!e.contains("inverse") || !e["inverse"].is_boolean()) throw DomainError("relator step needs inverse");
            s.inverse = e["inverse"].get<bool>();
        }
        out.push_back(s);
    }
    return out;
}

}  // namespace braidforge
