#pragma once

// Brute-force reference computations for the tests. Nothing here calls into
// the library's strategy or metrics code: distributions are enumerated over
// (word, outcome) pairs with exact keypad strings, and metrics are computed
// from an unsorted mass map with O(N^2) rank counting.

#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Masses = std::map<std::string, double>;

// Digit for each letter a..z.
inline const std::string standard_keys = "22233344455566677778889999";
inline const std::string stretched_keys = "11223344455566777888999000";

struct Construction {
    std::size_t n = 4;
    bool prefix = false;
    bool morph = false;
    std::string keys = standard_keys;
};

inline std::string translate(const std::string& word, const std::string& keys, std::size_t n)
{
    std::string pin;
    for (std::size_t i = 0; i < n; ++i)
        pin += keys[static_cast<std::size_t>(word[i] - 'a')];
    return pin;
}

// Every (word, position, digit) outcome weighted count/total * 1/(10n).
inline Masses enumerate(const std::vector<std::pair<std::string, double>>& words, const Construction& c)
{
    double total = 0;
    for (const auto& [w, count] : words)
        if (c.prefix ? w.size() >= c.n : w.size() == c.n)
            total += count;
    Masses out;
    for (const auto& [w, count] : words) {
        if (!(c.prefix ? w.size() >= c.n : w.size() == c.n))
            continue;
        const std::string pin = translate(w, c.keys, c.n);
        const double p = count / total;
        if (!c.morph) {
            out[pin] += p;
            continue;
        }
        for (std::size_t pos = 0; pos < c.n; ++pos)
            for (int d = 0; d < 10; ++d) {
                std::string m = pin;
                m[pos] = static_cast<char>('0' + d);
                out[m] += p / (10.0 * static_cast<double>(c.n));
            }
    }
    return out;
}

// 1-based guessing rank: strictly larger masses first, ties by PIN order.
inline std::size_t rank_of(const Masses& m, const std::string& pin)
{
    const double p = m.at(pin);
    std::size_t r = 1;
    for (const auto& [other, q] : m)
        if (q > p || (q == p && other < pin))
            ++r;
    return r;
}

inline double entropy(const Masses& m)
{
    double h = 0;
    for (const auto& [pin, p] : m)
        h -= p * std::log2(p);
    return h;
}

inline double guesswork(const Masses& m)
{
    double g = 0;
    for (const auto& [pin, p] : m)
        g += static_cast<double>(rank_of(m, pin)) * p;
    return g;
}

// Mass of everything ranked within the first k guesses.
inline double top_mass(const Masses& m, std::size_t k)
{
    double s = 0;
    for (const auto& [pin, p] : m)
        if (rank_of(m, pin) <= k)
            s += p;
    return s;
}

inline std::size_t marginal_guesswork(const Masses& m, double alpha)
{
    std::vector<double> by_rank(m.size() + 1, 0.0);
    for (const auto& [pin, p] : m)
        by_rank[rank_of(m, pin)] = p;
    double cum = 0;
    for (std::size_t k = 1; k <= m.size(); ++k) {
        cum += by_rank[k];
        if (cum >= alpha)
            return k;
    }
    return m.size();
}

}  // namespace oracle
