#ifndef QHECKE_ROOT_SYSTEM_HPP
#define QHECKE_ROOT_SYSTEM_HPP

#include "qhecke/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qhecke {

using IVec = std::vector<int>;
using QVec = std::vector<Rational>;

// A positive root together with its coroot.
// Weight coordinates are in the fundamental weight basis (wt[j] = <alpha,
// alpha_j^vee>), coweight coordinates in the simple coroot basis.
struct Root {
    IVec wt;     // alpha in fundamental weights
    IVec sr;     // alpha in simple roots
    IVec cowt;   // alpha^vee in simple coroots
    Rational len2; // (alpha, alpha); short roots have 1
    bool is_long = false;

    int coroot_height() const {
        int h = 0;
        for (int x : cowt) h += x;
        return h;
    }
    int root_height() const {
        int h = 0;
        for (int x : sr) h += x;
        return h;
    }
};

// Group element stored by its action matrices; `word` is the shortlex-minimal
// reduced word found by the breadth-first enumeration.
struct WeylElement {
    std::vector<IVec> wt_mat;   // column k = coords of w(omega_k)... row-major action on weight coords
    std::vector<IVec> cowt_mat; // action on coweight coords
    std::vector<int> word;
    int length = 0;
    int inverse = -1; // index of w^{-1}, filled by the enumeration
};

class WeylGroup;

class RootSystem {
  public:
    // Valid types: A (rank>=1), B (>=2), C (>=2), D (>=3), E (6..8), F (4), G (2).
    static RootSystem build(char type, int rank);
    static RootSystem build(const std::string &label); // e.g. "B2"

    char type() const { return type_; }
    int rank() const { return rank_; }
    std::string label() const { return std::string(1, type_) + std::to_string(rank_); }
    const std::vector<std::vector<int>> &cartan() const { return cartan_; }
    const std::vector<Root> &positive() const { return positive_; }
    const Root &root(int i) const { return positive_[i]; }
    int num_positive() const { return (int)positive_.size(); }
    bool simply_laced() const { return simply_laced_; }

    // canonical pairing <lambda, c> of a weight with a coweight (dot product
    // in the chosen coordinates)
    static Rational pair(const QVec &wt, const QVec &cowt);
    static int pair(const IVec &wt, const IVec &cowt);

    // W-invariant inner product on weights, normalized so (alpha,alpha) = 1
    // for short roots
    Rational form_weights(const QVec &a, const QVec &b) const;
    // the dual form on coweights
    Rational form_coweights(const QVec &a, const QVec &b) const;
    Rational coroot_norm2(const Root &r) const; // (alpha^vee, alpha^vee)

    // rho = sum of fundamental weights; (2rho, alpha^vee) = 2*coroot height
    IVec two_rho() const { return IVec(rank_, 2); }
    QVec rho_covector() const; // rho^vee, half sum of positive coroots

    // simple reflection on weight coords
    IVec reflect_weight(int i, const IVec &wt) const;
    QVec reflect_weight(int i, const QVec &wt) const;
    QVec reflect_coweight(int i, const QVec &c) const;

    // R_+' : long roots plus roots supported only on short simple roots;
    // all of R_+ in the simply-laced case.  Returns indices into positive().
    std::vector<int> r_plus_prime() const;
    bool in_r_plus_prime(const Root &r) const;

    // index of the positive root with the given simple-root expansion
    std::optional<int> find_root_by_sr(const IVec &sr) const;

    const WeylGroup &weyl() const;
    ~RootSystem();
    RootSystem(RootSystem &&) noexcept;
    RootSystem &operator=(RootSystem &&) noexcept;
    RootSystem(const RootSystem &) = delete;

  private:
    RootSystem() = default;
    void generate_roots();
    void validate() const;

    char type_ = 0;
    int rank_ = 0;
    bool simply_laced_ = true;
    std::vector<std::vector<int>> cartan_; // cartan_[i][j] = <alpha_i, alpha_j^vee>
    QVec len2_;                            // (alpha_i, alpha_i)
    std::vector<Root> positive_;
    std::vector<QVec> gram_;        // (alpha_i, alpha_j)
    std::vector<QVec> gram_inv_;    // inverse Gram, for the form in weight coords
    mutable std::unique_ptr<WeylGroup> weyl_;
};

class WeylGroup {
  public:
    // Breadth-first enumeration over right multiplication by simple
    // reflections; identity first, deterministic order.
    explicit WeylGroup(const RootSystem &rs, size_t bound = 1000000);

    const RootSystem &root_system() const { return *rs_; }
    int size() const { return (int)elems_.size(); }
    const WeylElement &operator[](int i) const { return elems_[i]; }
    int identity() const { return 0; }
    int longest() const { return longest_; }

    // group operations
    int mult(int a, int b) const;             // index of a*b
    int inverse(int a) const { return elems_[a].inverse; }
    int simple(int i) const { return simple_[i]; }

    // action on coordinate vectors
    IVec act_weight(int w, const IVec &wt) const;
    QVec act_weight(int w, const QVec &wt) const;
    IVec act_coweight(int w, const IVec &c) const;
    QVec act_coweight(int w, const QVec &c) const;

    // image of a positive root: (root index, sign)
    std::pair<int, int> act_root(int w, int root_idx) const;

    // reflection s_alpha as a group element
    int reflection(int root_idx) const { return reflections_[root_idx]; }
    int length(int w) const { return elems_[w].length; }
    const std::vector<int> &word(int w) const { return elems_[w].word; }

    // left inversion set {beta > 0 : w^{-1}(beta) < 0}, as root indices
    std::vector<int> inversions(int w) const;

    // all reduced words of w (DFS over right descents, lexicographic order)
    std::vector<std::vector<int>> all_reduced_words(int w) const;

    // index of the element with the given weight-coordinate action matrix
    int lookup_wt_mat(const std::vector<IVec> &m) const;

  private:
    const RootSystem *rs_;
    std::vector<WeylElement> elems_;
    std::vector<int> simple_;
    std::vector<int> reflections_;
    int longest_ = 0;
    std::map<std::vector<int>, int> index_; // flattened wt matrix -> index
    mutable std::vector<int> mult_table_;   // lazily built
    mutable bool table_built_ = false;
    void build_table() const;
};

// Per-root row of the length-lemma verification.
struct LengthLemmaRow {
    int root_idx;
    int refl_length;   // l(s_alpha)
    int two_rho_pair;  // (2rho, alpha^vee)
    bool in_prime;     // alpha in R_+'
    bool equality;     // l(s_alpha) == (2rho,alpha^vee)-1
    bool ok;           // inequality holds and equality <=> in_prime
};

// Verifies l(s_alpha) <= (2rho,alpha^vee)-1 with equality exactly on R_+'.
std::vector<LengthLemmaRow> length_lemma_check(const RootSystem &rs);

} // namespace qhecke

#endif
