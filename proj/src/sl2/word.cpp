#include "conway/sl2/word.hpp"

#include <algorithm>
#include <cctype>

#include "conway/error.hpp"

namespace conway::sl2
{

GroupWord::GroupWord(std::vector<Letter> letters)
{
    letters_.reserve(letters.size());
    for (const Letter &l : letters)
    {
        if (l.exponent != 1 && l.exponent != -1)
            fail(ErrorCode::InvalidArgument, "letter exponents must be +1 or -1");
        if (!letters_.empty() && letters_.back().generator == l.generator && letters_.back().exponent == -l.exponent)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }
}

GroupWord GroupWord::generator(int index, int exponent)
{
    if (index < 0)
        fail(ErrorCode::InvalidArgument, "negative generator index");
    return GroupWord({Letter{index, exponent}});
}

int GroupWord::max_generator() const
{
    int m = -1;
    for (const Letter &l : letters_)
        m = std::max(m, l.generator);
    return m;
}

GroupWord GroupWord::inverse() const
{
    std::vector<Letter> inv;
    inv.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        inv.push_back({it->generator, -it->exponent});
    return GroupWord(std::move(inv));
}

GroupWord GroupWord::pow(int n) const
{
    GroupWord base = n < 0 ? inverse() : *this;
    GroupWord r;
    for (int i = 0; i < std::abs(n); ++i)
        r = r * base;
    return r;
}

GroupWord operator*(const GroupWord &x, const GroupWord &y)
{
    std::vector<Letter> all = x.letters_;
    all.insert(all.end(), y.letters_.begin(), y.letters_.end());
    return GroupWord(std::move(all));
}

std::vector<int> GroupWord::exponent_sums(std::size_t generator_count) const
{
    std::vector<int> sums(generator_count, 0);
    for (const Letter &l : letters_)
        if (static_cast<std::size_t>(l.generator) < generator_count)
            sums[static_cast<std::size_t>(l.generator)] += l.exponent;
    return sums;
}

std::string GroupWord::to_string(std::span<const std::string> names) const
{
    if (letters_.empty())
        return "1";
    std::string out;
    for (const Letter &l : letters_)
    {
        if (!out.empty())
            out += ' ';
        out += static_cast<std::size_t>(l.generator) < names.size() ? names[static_cast<std::size_t>(l.generator)]
                                                                   : "g" + std::to_string(l.generator);
        if (l.exponent < 0)
            out += "^-1";
    }
    return out;
}

Presentation::Presentation(std::vector<std::string> generators) : generators_(std::move(generators))
{
    for (std::size_t i = 0; i < generators_.size(); ++i)
        for (std::size_t j = i + 1; j < generators_.size(); ++j)
            if (generators_[i] == generators_[j])
                fail(ErrorCode::InvalidArgument, "duplicate generator name '" + generators_[i] + "'");
}

int Presentation::generator_index(std::string_view name) const
{
    auto it = std::find(generators_.begin(), generators_.end(), name);
    if (it == generators_.end())
        fail(ErrorCode::ParseError, "unknown generator '" + std::string(name) + "'");
    return static_cast<int>(it - generators_.begin());
}

void Presentation::check(const GroupWord &w) const
{
    if (w.max_generator() >= static_cast<int>(generators_.size()))
        fail(ErrorCode::InvalidArgument, "word references generator outside the presentation");
}

void Presentation::add_relator(GroupWord w)
{
    check(w);
    relators_.push_back(std::move(w));
}

void Presentation::set_peripheral(const std::string &name, std::vector<GroupWord> words)
{
    for (const auto &w : words)
        check(w);
    peripheral_[name] = std::move(words);
}

GroupWord Presentation::parse_word(std::string_view text) const
{
    std::vector<Letter> letters;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    skip();
    if (text.substr(pos) == "1")
        return {};
    while (pos < text.size())
    {
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != '^')
            ++pos;
        std::string_view name = text.substr(start, pos - start);
        if (name.empty())
            fail(ErrorCode::ParseError, "malformed word '" + std::string(text) + "'");
        int exponent = 1;
        if (pos < text.size() && text[pos] == '^')
        {
            ++pos;
            std::size_t e0 = pos;
            while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
                ++pos;
            std::string e(text.substr(e0, pos - e0));
            e.erase(std::remove(e.begin(), e.end(), '('), e.end());
            e.erase(std::remove(e.begin(), e.end(), ')'), e.end());
            int n = 0;
            try
            {
                std::size_t used = 0;
                n = std::stoi(e, &used);
                if (used != e.size())
                    throw std::invalid_argument(e);
            }
            catch (const std::exception &)
            {
                fail(ErrorCode::ParseError, "bad exponent in word '" + std::string(text) + "'");
            }
            exponent = n;
        }
        int g = generator_index(name);
        for (int i = 0; i < std::abs(exponent); ++i)
            letters.push_back({g, exponent < 0 ? -1 : 1});
        skip();
    }
    return GroupWord(std::move(letters));
}

std::vector<GroupWord> Presentation::generators_and_pairs() const
{
    std::vector<GroupWord> words;
    int n = static_cast<int>(generators_.size());
    for (int i = 0; i < n; ++i)
        words.push_back(GroupWord::generator(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            words.push_back(GroupWord::generator(i) * GroupWord::generator(j));
    return words;
}

Presentation four_punctured_sphere()
{
    Presentation p({"m1", "m2", "m3", "m4"});
    std::vector<GroupWord> meridians;
    GroupWord rel;
    for (int i = 0; i < 4; ++i)
    {
        meridians.push_back(GroupWord::generator(i));
        rel = rel * GroupWord::generator(i);
    }
    p.add_relator(rel);
    p.set_peripheral("meridians", meridians);
    return p;
}

} // namespace conway::sl2
