#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace conway::sl2
{

struct Letter
{
    int generator = 0;
    int exponent = 1; // +1 or -1

    auto operator<=>(const Letter &) const = default;
};

// Freely reduced word in the generators of a presentation.
class GroupWord
{
  public:
    GroupWord() = default;
    explicit GroupWord(std::vector<Letter> letters);

    static GroupWord generator(int index, int exponent = 1);

    const std::vector<Letter> &letters() const noexcept { return letters_; }
    bool empty() const noexcept { return letters_.empty(); }
    std::size_t length() const noexcept { return letters_.size(); }
    int max_generator() const;

    GroupWord inverse() const;
    GroupWord pow(int n) const;
    friend GroupWord operator*(const GroupWord &x, const GroupWord &y);

    // Sum of exponents of each generator (abelianization image).
    std::vector<int> exponent_sums(std::size_t generator_count) const;

    auto operator<=>(const GroupWord &) const = default;

    // "m1 m2^-1 m3"; the empty word prints as "1".
    std::string to_string(std::span<const std::string> names) const;

  private:
    std::vector<Letter> letters_;
};

class Presentation
{
  public:
    Presentation() = default;
    explicit Presentation(std::vector<std::string> generators);

    std::size_t generator_count() const noexcept { return generators_.size(); }
    const std::vector<std::string> &generators() const noexcept { return generators_; }
    const std::vector<GroupWord> &relators() const noexcept { return relators_; }
    const std::map<std::string, std::vector<GroupWord>> &peripheral() const noexcept { return peripheral_; }

    int generator_index(std::string_view name) const;
    GroupWord gen(std::string_view name) const { return GroupWord::generator(generator_index(name)); }

    void add_relator(GroupWord w);
    void set_peripheral(const std::string &name, std::vector<GroupWord> words);

    // Parses "m1 m2^-1 m3" (also accepts "m2^-1" as "m2^(-1)" and the
    // literal "1" for the empty word).
    GroupWord parse_word(std::string_view text) const;
    std::string format(const GroupWord &w) const { return w.to_string(generators_); }

    // The words of the standard character queries: generators and their
    // ordered pairwise products g_i g_j, i < j.
    std::vector<GroupWord> generators_and_pairs() const;

  private:
    std::vector<std::string> generators_;
    std::vector<GroupWord> relators_;
    std::map<std::string, std::vector<GroupWord>> peripheral_;

    void check(const GroupWord &w) const;
};

// <m1, m2, m3, m4 | m1 m2 m3 m4>, peripheral mark "meridians".
Presentation four_punctured_sphere();

} // namespace conway::sl2
