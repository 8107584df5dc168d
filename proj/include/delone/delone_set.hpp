#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "delone/golden.hpp"
#include "delone/substitution.hpp"

namespace delone {

/// Exact point of R^d, d = 1 or 2, with coordinates in Z[phi].
struct Pt {
    Golden x{0, 0};
    Golden y{0, 0};
    int dim = 1;

    static Pt d1(Golden x_) { return {x_, {0, 0}, 1}; }
    static Pt d2(Golden x_, Golden y_) { return {x_, y_, 2}; }
    static Pt zero(int dim_) { return {{0, 0}, {0, 0}, dim_}; }

    friend Pt operator+(Pt p, Pt q) { return {p.x + q.x, p.y + q.y, p.dim}; }
    friend Pt operator-(Pt p, Pt q) { return {p.x - q.x, p.y - q.y, p.dim}; }
    Pt operator-() const { return {-x, -y, dim}; }
    friend bool operator==(Pt p, Pt q) { return p.dim == q.dim && p.x == q.x && p.y == q.y; }
    friend bool operator!=(Pt p, Pt q) { return !(p == q); }

    double norm() const;
    bool lex_less(const Pt& o) const; // exact lexicographic (x, then y)
};

/// Finite patch up to translation: points sorted lexicographically and
/// re-anchored so the least point is exactly the origin.
struct Cluster {
    int dim = 1;
    std::vector<Pt> points;

    static Cluster anchored(std::vector<Pt> pts);
    bool operator==(const Cluster& o) const { return dim == o.dim && points == o.points; }
    size_t size() const { return points.size(); }
    std::string key() const; // exact text key, usable for hashing/grouping
    std::string csv() const; // "a,b[,a2,b2],float[,float]" rows
};

enum class SpecKind { Substitution, CutProject, Periodic, Product };

/// Generator description of a Delone set. Substitution and cut-and-project
/// sets are one-dimensional with coordinates in Z[phi]; two dimensions come
/// from products of two one-dimensional specs.
class DeloneSpec {
  public:
    static DeloneSpec substitution(SubstRule rule, std::string seed = "");
    static DeloneSpec fibonacci(std::string seed = ""); // rule a->ab, b->a, lengths (phi, 1)
    /// Model set {x in Z[phi] : x* in [lo, hi)}.
    static DeloneSpec cut_project(GoldenFrac lo, GoldenFrac hi);
    static DeloneSpec periodic(Golden basis);
    static DeloneSpec product(DeloneSpec a, DeloneSpec b);

    SpecKind kind() const { return kind_; }
    int dimension() const { return kind_ == SpecKind::Product ? 2 : 1; }

    const TwoSidedWord& word() const; // Substitution only
    const DeloneSpec& factor(int i) const; // Product only
    Golden period() const { return period_; }
    GoldenFrac window_lo() const { return cp_lo_; }
    GoldenFrac window_hi() const { return cp_hi_; }

    /// Exact points of the set in [lo, hi] (1D kinds only), ascending.
    std::vector<Golden> points_in(GoldenFrac lo, GoldenFrac hi) const;

    /// Upper bound for gaps between consecutive points (1D kinds).
    double max_gap_hint() const;

    /// Identity of the underlying set (rule+seed / window / basis), used to
    /// decide whether two hull points can share an orbit.
    std::string base_id() const;

    bool same_base(const DeloneSpec& o) const { return base_id() == o.base_id(); }

  private:
    DeloneSpec() = default;
    SpecKind kind_ = SpecKind::Periodic;
    std::shared_ptr<TwoSidedWord> word_; // shared: hull points copy specs freely
    GoldenFrac cp_lo_{}, cp_hi_{};
    Golden period_{1, 0};
    std::shared_ptr<DeloneSpec> fx_, fy_;
};

/// Points of spec translated by -shift, clipped to the closed ball
/// B_radius(center): i.e. {p - shift : p in spec, |p - shift - center| <= radius}.
std::vector<Pt> window_points(const DeloneSpec& spec, Pt shift, Pt center, GoldenFrac radius);

/// B_R(center) as an anchored Cluster.
Cluster patch(const DeloneSpec& spec, Pt center, double radius);
Cluster patch_exact(const DeloneSpec& spec, Pt center, GoldenFrac radius);

struct DeloneConstants {
    double packing_r;  // min nearest-neighbour gap observed
    double covering_R; // max covering radius observed
};

/// Scan B_probe(0) for the min gap and max hole. Needs >= 2 points inside.
DeloneConstants delone_constants(const DeloneSpec& spec, double probe_radius);

/// Distinct translation classes of B_R(x)-patches, x ranging over the points
/// of the set inside a scan window. The scan doubles until the class count
/// stabilizes twice, a finite-local-complexity witness; gives up at scan_cap.
std::vector<Cluster> enumerate_clusters(const DeloneSpec& spec, double R,
                                        double scan_start = 32.0, double scan_cap = 65536.0);

/// Smallest tested R such that every ball B_R(x), x on a grid inside the scan
/// window, contains a translate of P. Scan-window estimate, not exact.
double repetitivity_radius(const DeloneSpec& spec, const Cluster& P, double scan_bound);

/// Exact count of translates of P inside window [lo, hi] (1D).
long long cluster_count(const DeloneSpec& spec, const Cluster& P, GoldenFrac lo, GoldenFrac hi);

} // namespace delone
