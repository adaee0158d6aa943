#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace braidforge {

// Generator names are interned; a letter is +(id+1) or -(id+1).
int intern(const std::string& name);
const std::string& symbol_name(int id);
inline int letter_id(int letter) { return (letter > 0 ? letter : -letter) - 1; }
inline int make_letter(int id, int sign) { return sign > 0 ? id + 1 : -(id + 1); }

std::vector<int> free_reduce(const std::vector<int>& letters);

// Always freely reduced.
struct GroupWord {
    std::vector<int> letters;

    GroupWord() = default;
    explicit GroupWord(std::vector<int> ls) : letters(free_reduce(ls)) {}
    static GroupWord gen(const std::string& name, int e = 1);
    // "x y^-1 x^2"; "1" is the identity.
    static GroupWord parse(const std::string& text);

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    bool operator==(const GroupWord&) const = default;
    auto operator<=>(const GroupWord&) const = default;
};

GroupWord operator*(const GroupWord& u, const GroupWord& v);
GroupWord inverse(const GroupWord& w);
GroupWord power(const GroupWord& w, int e);
GroupWord conjugate(const GroupWord& g, const GroupWord& w);  // g w g^-1
int exponent_sum(const GroupWord& w, int id);
GroupWord rename(const GroupWord& w, const std::map<int, int>& ids);
std::string to_string(const GroupWord& w);
std::string letters_to_string(const std::vector<int>& letters);

nlohmann::json to_json(const GroupWord& w);
nlohmann::json letters_to_json(const std::vector<int>& letters);
std::vector<int> letters_from_json(const nlohmann::json& j);
GroupWord word_from_json(const nlohmann::json& j);

struct Presentation {
    std::vector<std::string> generators;
    std::vector<GroupWord> relators;
    std::map<std::string, GroupWord> peripherals;

    bool has_generator(int id) const;
    const GroupWord& peripheral(const std::string& key) const;  // DomainError if absent
};

// DomainError if a word uses an undeclared generator or names repeat.
void validate(const Presentation& p);
void validate_word(const Presentation& p, const std::vector<int>& letters);

nlohmann::json to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);

}  // namespace braidforge
