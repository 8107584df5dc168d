#include "delone/substitution.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace delone {

std::vector<char> SubstRule::alphabet() const {
    std::vector<char> out;
    for (auto& [c, img] : images) out.push_back(c);
    return out;
}

bool SubstRule::lengths_positive() const {
    for (auto& [c, img] : images) {
        auto it = lengths.find(c);
        if (it == lengths.end() || sign(it->second) <= 0) return false;
    }
    return true;
}

bool SubstRule::is_primitive() const {
    auto ab = alphabet();
    size_t n = ab.size();
    if (n == 0) return false;
    auto idx = [&](char c) { return std::find(ab.begin(), ab.end(), c) - ab.begin(); };
    // boolean incidence closure
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (auto& [c, img] : images) {
        for (char d : img) {
            if (!has_letter(d)) return false;
            reach[idx(c)][idx(d)] = true;
        }
    }
    auto mul = [&](const std::vector<std::vector<bool>>& A, const std::vector<std::vector<bool>>& B) {
        std::vector<std::vector<bool>> C(n, std::vector<bool>(n, false));
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k)
                if (A[i][k])
                    for (size_t j = 0; j < n; ++j)
                        if (B[k][j]) C[i][j] = true;
        return C;
    };
    auto M = reach;
    for (size_t p = 1; p <= 2 * n; ++p) {
        bool all = true;
        for (auto& row : M)
            for (bool v : row) all = all && v;
        if (all) return true;
        M = mul(M, reach);
    }
    return false;
}

SubstRule SubstRule::fibonacci() {
    SubstRule r;
    r.images = {{'a', "ab"}, {'b', "a"}};
    r.lengths = {{'a', Golden::phi()}, {'b', Golden::integer(1)}};
    return r;
}

std::string substitute(const SubstRule& rule, const std::string& seed, int depth) {
    if (depth < 0) throw std::invalid_argument("substitute: negative depth");
    for (char c : seed)
        if (!rule.has_letter(c)) throw std::invalid_argument(std::string("substitute: unknown letter '") + c + "'");
    std::string w = seed;
    for (int i = 0; i < depth; ++i) {
        std::string next;
        next.reserve(w.size() * 2);
        for (char c : w) next += rule.images.at(c);
        w.swap(next);
        if (w.size() > (1ull << 27)) throw std::runtime_error("substitute: word too large");
    }
    return w;
}

namespace {

/// Factors of length 2 occurring in the substitution language.
std::set<std::string> legal_pairs(const SubstRule& rule) {
    // iterate sigma on the set of 2-factors of sigma^n(c) until stable
    std::set<std::string> pairs;
    for (auto& [c, img] : rule.images) {
        std::string w = substitute(rule, std::string(1, c), 4);
        for (size_t i = 0; i + 1 < w.size(); ++i) pairs.insert(w.substr(i, 2));
    }
    for (int round = 0; round < 8; ++round) {
        std::set<std::string> next = pairs;
        for (auto& p : pairs) {
            std::string w = rule.images.at(p[0]) + rule.images.at(p[1]);
            for (size_t i = 0; i + 1 < w.size(); ++i) next.insert(w.substr(i, 2));
        }
        if (next == pairs) break;
        pairs.swap(next);
    }
    return pairs;
}

} // namespace

std::vector<SeedPair> find_seed_pairs(const SubstRule& rule, int max_power) {
    std::vector<SeedPair> out;
    auto pairs = legal_pairs(rule);
    for (int k = 1; k <= max_power; ++k) {
        for (auto& p : pairs) {
            std::string li = substitute(rule, std::string(1, p[0]), k);
            std::string ri = substitute(rule, std::string(1, p[1]), k);
            if (li.back() == p[0] && ri.front() == p[1] && li.size() + ri.size() > 2) {
                bool seen = false;
                for (auto& s : out) seen = seen || (s.l == p[0] && s.r == p[1]);
                if (!seen) out.push_back({p[0], p[1], k});
            }
        }
        if (!out.empty()) break;
    }
    return out;
}

TwoSidedWord::TwoSidedWord(SubstRule rule, std::string seed) : rule_(std::move(rule)) {
    if (!rule_.is_primitive()) throw std::invalid_argument("substitution rule is not primitive");
    if (!rule_.lengths_positive()) throw std::invalid_argument("tile lengths must be positive");
    auto seeds = find_seed_pairs(rule_);
    if (seeds.empty()) throw std::invalid_argument("no two-sided fixed point seed found");
    if (seed.empty()) {
        seed_ = std::string{seeds.front().l, seeds.front().r};
        power_ = seeds.front().power;
    } else {
        if (seed.size() != 2) throw std::invalid_argument("seed must be two letters");
        bool ok = false;
        for (auto& s : seeds)
            if (s.l == seed[0] && s.r == seed[1]) {
                ok = true;
                power_ = s.power;
            }
        if (!ok) throw std::invalid_argument("seed pair '" + seed + "' does not generate a fixed point");
        seed_ = seed;
    }
    left_ = std::string(1, seed_[0]);
    right_ = std::string(1, seed_[1]);
    lstart_ = {-rule_.lengths.at(seed_[0])};
    rstart_ = {Golden{0, 0}};
}

void TwoSidedWord::grow() const {
    // expand both halves by one application of sigma^power
    std::string nr;
    for (char c : right_) nr += substitute(rule_, std::string(1, c), power_);
    std::string nl; // left_ stores letters outward: left_[k] = w_{-1-k}; rebuild inward
    {
        std::string inward(left_.rbegin(), left_.rend()); // ... w_{-2} w_{-1}
        std::string img;
        for (char c : inward) img += substitute(rule_, std::string(1, c), power_);
        nl.assign(img.rbegin(), img.rend());
    }
    if (nr.size() > (1ull << 26) || nl.size() > (1ull << 26))
        throw std::runtime_error("two-sided word exceeds supported extent");
    right_.swap(nr);
    left_.swap(nl);
    rstart_.resize(right_.size());
    rstart_[0] = {0, 0};
    for (size_t k = 1; k < right_.size(); ++k)
        rstart_[k] = rstart_[k - 1] + rule_.lengths.at(right_[k - 1]);
    lstart_.resize(left_.size());
    Golden x{0, 0};
    for (size_t k = 0; k < left_.size(); ++k) {
        x = x - rule_.lengths.at(left_[k]);
        lstart_[k] = x;
    }
}

void TwoSidedWord::ensure_extent(double extent) const {
    while (rstart_.back().value() < extent || lstart_.back().value() > -extent) grow();
}

char TwoSidedWord::letter(long long k) const {
    while (k >= hi_index() || k < lo_index()) grow();
    return k >= 0 ? right_[(size_t)k] : left_[(size_t)(-1 - k)];
}

Golden TwoSidedWord::start(long long k) const {
    while (k >= hi_index() || k < lo_index()) grow();
    return k >= 0 ? rstart_[(size_t)k] : lstart_[(size_t)(-1 - k)];
}

long long TwoSidedWord::tile_index_at(Golden x) const { return tile_index_at(GoldenFrac::of(x)); }

long long TwoSidedWord::tile_index_at(GoldenFrac x) const {
    ensure_extent(std::abs(x.value()) + 2.0);
    long long lo = lo_index(), hi = hi_index() - 1;
    // invariant: start(lo) <= x (grow until true)
    while (sign(x - GoldenFrac::of(start(lo))) < 0) { grow(); lo = lo_index(); }
    while (sign(x - GoldenFrac::of(start(hi))) < 0) --hi;
    while (lo < hi) {
        long long mid = lo + (hi - lo + 1) / 2;
        if (sign(GoldenFrac::of(start(mid)) - x) <= 0) lo = mid;
        else hi = mid - 1;
    }
    return lo;
}

std::pair<long long, long long> TwoSidedWord::starts_in(GoldenFrac lo, GoldenFrac hi) const {
    long long k = tile_index_at(lo);
    if (sign(GoldenFrac::of(start(k)) - lo) < 0) ++k; // start(k) >= lo
    long long m = tile_index_at(hi);
    return {k, m};
}

} // namespace delone
