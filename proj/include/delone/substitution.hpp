#pragma once

#include <map>
#include <string>
#include <vector>

#include "delone/golden.hpp"

namespace delone {

/// A symbolic substitution rule sigma: letter -> word, with a tile length per
/// letter. Alphabet letters are single chars.
struct SubstRule {
    std::map<char, std::string> images;
    std::map<char, Golden> lengths;

    bool has_letter(char c) const { return images.count(c) != 0; }
    std::vector<char> alphabet() const;

    /// Primitivity: some power of the incidence matrix is strictly positive.
    bool is_primitive() const;

    /// All positive tile lengths?
    bool lengths_positive() const;

    static SubstRule fibonacci();
};

/// sigma^depth(seed) as a plain word.
std::string substitute(const SubstRule& rule, const std::string& seed, int depth);

/// Two-sided fixed point of a primitive substitution, realized as a growing
/// window of letters around a marked origin. The word w = ... w_{-1} | w_0 ...
/// satisfies sigma^k(w) = w for the power k found at construction, with seed
/// pair (w_{-1}, w_0) legal for the rule. Tile k occupies
/// [start(k), start(k) + length(w_k)), start(0) = 0, exactly in Z[phi].
class TwoSidedWord {
  public:
    /// seed: two letters "lr" with sigma^k(l) ending in l and sigma^k(r)
    /// starting with r for some k <= 8, and "lr" a factor of the language.
    /// Empty seed picks the first legal pair.
    TwoSidedWord(SubstRule rule, std::string seed = "");

    const SubstRule& rule() const { return rule_; }
    const std::string& seed() const { return seed_; }

    /// Guarantee tiles covering [-extent, extent] (geometric length).
    void ensure_extent(double extent) const;

    /// Letter and exact start coordinate of tile k (origin tile is k = 0).
    char letter(long long k) const;
    Golden start(long long k) const;
    Golden length_of(char c) const { return rule_.lengths.at(c); }

    /// Largest k with start(k) <= x. Grows the window as needed.
    long long tile_index_at(Golden x) const;
    long long tile_index_at(GoldenFrac x) const;

    /// Inclusive index range of tile starts inside [lo, hi].
    std::pair<long long, long long> starts_in(GoldenFrac lo, GoldenFrac hi) const;

    /// Currently materialized index range [lo, hi) of tiles.
    long long lo_index() const { return -(long long)left_.size(); }
    long long hi_index() const { return (long long)right_.size(); }

  private:
    void grow() const;

    SubstRule rule_;
    std::string seed_;
    int power_ = 1; // sigma^power fixes the seed pair
    // right_[k] = w_k for k >= 0; left_[k] = w_{-1-k}
    mutable std::string right_, left_;
    mutable std::vector<Golden> rstart_, lstart_; // rstart_[k]=start(k), lstart_[k]=start(-1-k)
};

/// Legal seed pairs (l, r) for a two-sided fixed point, with the power k.
struct SeedPair {
    char l, r;
    int power;
};
std::vector<SeedPair> find_seed_pairs(const SubstRule& rule, int max_power = 8);

} // namespace delone
