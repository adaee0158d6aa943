#include "braidforge/group.hpp"

#include <deque>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>

#include "braidforge/errors.hpp"

namespace braidforge {

namespace {

struct SymbolTable {
    std::mutex mu;
    std::unordered_map<std::string, int> ids;
    std::deque<std::string> names;
};

SymbolTable& table() {
    static SymbolTable t;
    return t;
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c == '^' || c == ' ' || c == '\t' || c == '\n' || c == '"') return false;
    return s != "1";
}

}  // namespace

int intern(const std::string& name) {
    if (!valid_name(name)) throw DomainError("bad generator name '" + name + "'");
    auto& t = table();
    std::lock_guard<std::mutex> lock(t.mu);
    auto it = t.ids.find(name);
    if (it != t.ids.end()) return it->second;
    int id = static_cast<int>(t.names.size());
    t.names.push_back(name);
    t.ids.emplace(name, id);
    return id;
}

const std::string& symbol_name(int id) {
    auto& t = table();
    std::lock_guard<std::mutex> lock(t.mu);
    if (id < 0 || id >= static_cast<int>(t.names.size()))
        throw DomainError("unknown symbol id " + std::to_string(id));
    return t.names[static_cast<std::size_t>(id)];
}

std::vector<int> free_reduce(const std::vector<int>& letters) {
    std::vector<int> out;
    out.reserve(letters.size());
    for (int a : letters) {
        if (a == 0) throw DomainError("zero letter");
        if (!out.empty() && out.back() == -a)
            out.pop_back();
        else
            out.push_back(a);
    }
    return out;
}

GroupWord GroupWord::gen(const std::string& name, int e) {
    int id = intern(name);
    std::vector<int> ls(static_cast<std::size_t>(e < 0 ? -e : e), make_letter(id, e < 0 ? -1 : 1));
    GroupWord w;
    w.letters = std::move(ls);
    return w;
}

GroupWord GroupWord::parse(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    std::vector<int> ls;
    while (in >> tok) {
        if (tok == "1") continue;
        auto caret = tok.find('^');
        std::string name = tok.substr(0, caret);
        int e = 1;
        if (caret != std::string::npos) {
            try {
                std::size_t used = 0;
                e = std::stoi(tok.substr(caret + 1), &used);
                if (used != tok.size() - caret - 1) throw DomainError("bad exponent");
            } catch (const std::logic_error&) {
                throw DomainError("bad exponent in '" + tok + "'");
            }
        }
        int id = intern(name);
        for (int k = 0; k < (e < 0 ? -e : e); ++k) ls.push_back(make_letter(id, e < 0 ? -1 : 1));
    }
    return GroupWord(std::move(ls));
}

GroupWord operator*(const GroupWord& u, const GroupWord& v) {
    std::vector<int> ls = u.letters;
    ls.insert(ls.end(), v.letters.begin(), v.letters.end());
    return GroupWord(std::move(ls));
}

GroupWord inverse(const GroupWord& w) {
    GroupWord r;
    r.letters.assign(w.letters.rbegin(), w.letters.rend());
    for (int& a : r.letters) a = -a;
    return r;
}

GroupWord power(const GroupWord& w, int e) {
    GroupWord base = e < 0 ? inverse(w) : w;
    std::vector<int> ls;
    for (int k = 0; k < (e < 0 ? -e : e); ++k) ls.insert(ls.end(), base.letters.begin(), base.letters.end());
    return GroupWord(std::move(ls));
}

GroupWord conjugate(const GroupWord& g, const GroupWord& w) { return g * w * inverse(g); }

int exponent_sum(const GroupWord& w, int id) {
    int s = 0;
    for (int a : w.letters)
        if (letter_id(a) == id) s += a > 0 ? 1 : -1;
    return s;
}

GroupWord rename(const GroupWord& w, const std::map<int, int>& ids) {
    std::vector<int> ls;
    ls.reserve(w.size());
    for (int a : w.letters) {
        auto it = ids.find(letter_id(a));
        ls.push_back(it == ids.end() ? a : make_letter(it->second, a > 0 ? 1 : -1));
    }
    return GroupWord(std::move(ls));
}

std::string letters_to_string(const std::vector<int>& letters) {
    if (letters.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < letters.size()) {
        std::size_t j = i;
        while (j < letters.size() && letters[j] == letters[i]) ++j;
        int e = static_cast<int>(j - i) * (letters[i] > 0 ? 1 : -1);
        if (!out.empty()) out += ' ';
        out += symbol_name(letter_id(letters[i]));
        if (e != 1) out += "^" + std::to_string(e);
        i = j;
    }
    return out;
}

std::string to_string(const GroupWord& w) { return letters_to_string(w.letters); }

nlohmann::json letters_to_json(const std::vector<int>& letters) {
    nlohmann::json j = nlohmann::json::array();
    for (int a : letters) j.push_back({symbol_name(letter_id(a)), a > 0 ? 1 : -1});
    return j;
}

nlohmann::json to_json(const GroupWord& w) { return letters_to_json(w.letters); }

std::vector<int> letters_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw DomainError("word must be an array");
    std::vector<int> ls;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_number_integer())
            throw DomainError("word letter must be [name, +-1]");
        int e = p[1].get<int>();
        if (e != 1 && e != -1) throw DomainError("letter exponent must be +-1");
        ls.push_back(make_letter(intern(p[0].get<std::string>()), e));
    }
    return ls;
}

GroupWord word_from_json(const nlohmann::json& j) { return GroupWord(letters_from_json(j)); }

bool Presentation::has_generator(int id) const {
    const std::string& n = symbol_name(id);
    for (const auto& g : generators)
        if (g == n) return true;
    return false;
}

const GroupWord& Presentation::peripheral(const std::string& key) const {
    auto it = peripherals.find(key);
    if (it == peripherals.end()) throw DomainError("presentation has no peripheral '" + key + "'");
    return it->second;
}

void validate_word(const Presentation& p, const std::vector<int>& letters) {
    std::set<int> ids;
    for (const auto& g : p.generators) ids.insert(intern(g));
    for (int a : letters)
        if (!ids.count(letter_id(a)))
            throw DomainError("undeclared generator '" + symbol_name(letter_id(a)) + "'");
}

void validate(const Presentation& p) {
    std::set<std::string> seen;
    for (const auto& g : p.generators) {
        intern(g);
        if (!seen.insert(g).second) throw DomainError("repeated generator '" + g + "'");
    }
    for (const auto& r : p.relators) validate_word(p, r.letters);
    for (const auto& [k, w] : p.peripherals) validate_word(p, w.letters);
}

nlohmann::json to_json(const Presentation& p) {
    nlohmann::json j;
    j["generators"] = p.generators;
    j["relators"] = nlohmann::json::array();
    for (const auto& r : p.relators) j["relators"].push_back(to_json(r));
    j["peripherals"] = nlohmann::json::object();
    for (const auto& [k, w] : p.peripherals) j["peripherals"][k] = to_json(w);
    return j;
}

Presentation presentation_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("generators") || !j.contains("relators"))
        throw DomainError("presentation needs generators and relators");
    Presentation p;
    for (const auto& g : j.at("generators")) {
        if (!g.is_string()) throw DomainError("generator names must be strings");
        p.generators.push_back(g.get<std::string>());
    }
    for (const auto& r : j.at("relators")) p.relators.push_back(word_from_json(r));
    if (j.contains("peripherals")) {
        if (!j["peripherals"].is_object()) throw DomainError("peripherals must be an object");
        for (const auto& [k, w] : j["peripherals"].items()) p.peripherals[k] = word_from_json(w);
    }
    validate(p);
    return p;
}

}  // namespace braidforge
