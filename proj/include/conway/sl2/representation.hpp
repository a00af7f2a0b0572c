#pragma once

#include <map>
#include <span>
#include <vector>

#include "conway/error.hpp"
#include "conway/sl2/mat2.hpp"
#include "conway/sl2/word.hpp"

namespace conway::sl2
{

// One SL(2) matrix per generator of a presentation.
template <class T>
struct Representation
{
    Presentation presentation;
    std::vector<Mat2<T>> images;

    Representation() = default;
    Representation(Presentation p, std::vector<Mat2<T>> imgs) : presentation(std::move(p)), images(std::move(imgs))
    {
        if (images.size() != presentation.generator_count())
            fail(ErrorCode::ArityMismatch, "representation needs one image per generator");
    }

    const Mat2<T> &image(int generator) const { return images.at(static_cast<std::size_t>(generator)); }

    Representation conjugated_by(const Mat2<T> &g) const
    {
        Representation r = *this;
        Mat2<T> gi = g.inverse_sl2();
        for (auto &m : r.images)
            m = g * m * gi;
        return r;
    }
};

template <class T>
Mat2<T> word_eval(std::span<const Mat2<T>> images, const GroupWord &w)
{
    Mat2<T> m = Mat2<T>::identity();
    for (const Letter &l : w.letters())
    {
        if (static_cast<std::size_t>(l.generator) >= images.size())
            fail(ErrorCode::InvalidArgument, "word references a generator without an image");
        const Mat2<T> &g = images[static_cast<std::size_t>(l.generator)];
        m = m * (l.exponent > 0 ? g : g.inverse_sl2());
    }
    return m;
}

template <class T>
Mat2<T> word_eval(const Representation<T> &rep, const GroupWord &w)
{
    return word_eval<T>(std::span<const Mat2<T>>(rep.images), w);
}

// Every relator maps to the identity.
template <class T>
bool relators_hold(const Representation<T> &rep)
{
    for (const auto &r : rep.presentation.relators())
        if (!(word_eval(rep, r) == Mat2<T>::identity()))
            return false;
    return true;
}

template <class T>
using CharacterTable = std::map<GroupWord, T>;

// Traces of the requested words plus the empty word, the generators and
// their pairwise products.
template <class T>
CharacterTable<T> character_of(const Representation<T> &rep, std::span<const GroupWord> words = {})
{
    CharacterTable<T> table;
    table.emplace(GroupWord{}, T(2));
    for (const auto &w : rep.presentation.generators_and_pairs())
        table.emplace(w, word_eval(rep, w).trace());
    for (const auto &w : words)
        if (!table.contains(w))
            table.emplace(w, word_eval(rep, w).trace());
    return table;
}

template <class T>
T commutator_trace(const Representation<T> &rep, const GroupWord &g, const GroupWord &h)
{
    return commutator(word_eval(rep, g), word_eval(rep, h)).trace();
}

// Image of a list of words as a representation of the free group on them.
template <class T>
std::vector<Mat2<T>> evaluate_all(const Representation<T> &rep, std::span<const GroupWord> words)
{
    std::vector<Mat2<T>> out;
    out.reserve(words.size());
    for (const auto &w : words)
        out.push_back(word_eval(rep, w));
    return out;
}

} // namespace conway::sl2
