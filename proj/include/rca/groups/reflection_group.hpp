#pragma once
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rca/groups/seminormal.hpp"
#include "rca/scalars/matrix.hpp"
#include "rca/typea/partition.hpp"

namespace rca {

struct OutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnknownGroupSpec : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnsupportedIrrep : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotARepresentation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class GroupKind { Symmetric, Cyclic, DihedralOdd, DihedralEven };

// g e_j = zeta_N^{root[j]} e_{perm[j]}: every group in scope acts on h by
// monomial unitary matrices in a suitable orthonormal basis.
struct MonomialElement {
    std::vector<int> perm;
    std::vector<int> root;
    auto operator<=>(const MonomialElement&) const = default;
};

struct ReflectionDatum {
    size_t element_index;
    std::vector<Cyclotomic> alpha;        // coordinates in the basis x_i of h*
    std::vector<Cyclotomic> alpha_check;  // coordinates in the basis y_i of h
    Cyclotomic lambda;                    // eigenvalue of s on alpha
    int class_index;
};

class Irrep;

class ReflectionGroup {
public:
    static std::shared_ptr<const ReflectionGroup> symmetric(int n, int max_n = 8);
    static std::shared_ptr<const ReflectionGroup> cyclic(int m);
    static std::shared_ptr<const ReflectionGroup> dihedral_odd(int d);
    static std::shared_ptr<const ReflectionGroup> dihedral_even(int d);
    // "Sn:4", "Cyc:5", "DihOdd:2", "DihEven:3"
    static std::shared_ptr<const ReflectionGroup> from_spec(const std::string& spec);

    GroupKind kind() const { return kind_; }
    int param() const { return param_; }
    std::string spec() const;
    int dim_h() const { return rank_; }
    int field_order() const { return field_; }
    size_t order() const { return elems_.size(); }
    bool is_coxeter() const { return coxeter_; }
    const std::vector<int>& degrees() const { return degrees_; }
    int coxeter_number() const { return coxeter_number_; }

    const MonomialElement& element(size_t i) const { return elems_[i]; }
    size_t identity() const { return 0; }
    size_t multiply(size_t a, size_t b) const;
    size_t inverse(size_t a) const;
    std::optional<size_t> find(const MonomialElement& e) const;

    Matrix<Cyclotomic> matrix_h(size_t g) const;      // action on h in basis y_i
    Matrix<Cyclotomic> matrix_hstar(size_t g) const;  // action on h* in basis x_i

    // g . x^mu = coef * x^nu
    std::pair<Cyclotomic, std::vector<int>> act_monomial(size_t g, const std::vector<int>& mu) const;
    // exponent of zeta in the coefficient above, and nu
    long act_monomial_root(size_t g, const std::vector<int>& mu, std::vector<int>& nu) const;

    const std::vector<ReflectionDatum>& reflections() const { return refl_; }
    int num_classes() const { return num_classes_; }
    std::vector<std::vector<size_t>> reflection_classes() const;

    const std::vector<Irrep>& irreps() const { return *irreps_; }
    const Irrep& irrep(const std::string& label) const;

    // for symmetric groups: element index from a permutation
    size_t perm_index(const std::vector<int>& w) const;

private:
    ReflectionGroup() = default;
    void finish_reflections(const std::vector<size_t>& refl_elements, const std::vector<int>& classes);
    void index_elements();
    void build_irreps();

    GroupKind kind_{};
    int param_ = 0;
    int rank_ = 0;
    int field_ = 1;
    bool coxeter_ = false;
    int coxeter_number_ = 0;
    std::vector<int> degrees_;
    std::vector<MonomialElement> elems_;
    std::map<MonomialElement, size_t> lookup_;
    std::vector<ReflectionDatum> refl_;
    int num_classes_ = 0;
    std::shared_ptr<std::vector<Irrep>> irreps_;
};

using GroupPtr = std::shared_ptr<const ReflectionGroup>;

// Unitary (for the stored form) irreducible representation with matrices over Q(zeta_N).
class Irrep {
public:
    using Maker = std::function<Matrix<Cyclotomic>(size_t)>;
    Irrep(std::string label, int dim, size_t group_order, Maker make, Matrix<Cyclotomic> form);

    const std::string& label() const { return label_; }
    int dim() const { return dim_; }
    const Matrix<Cyclotomic>& matrix(size_t g) const;
    const Matrix<Cyclotomic>& form() const { return form_; }
    Cyclotomic character(size_t g) const;

    // set for symmetric-group irreps
    std::optional<Partition> partition;
    std::shared_ptr<const SeminormalRep> seminormal;

private:
    std::string label_;
    int dim_;
    Maker make_;
    Matrix<Cyclotomic> form_;
    struct Cache {
        std::mutex mu;
        std::vector<std::unique_ptr<Matrix<Cyclotomic>>> mats;
    };
    std::shared_ptr<Cache> cache_;
};

// chi (one-dimensional) tensor tau, as a new irrep
Irrep twist(const ReflectionGroup& g, const Irrep& chi, const Irrep& tau, const std::string& label);

// Isotypic projectors P_sigma = (dim sigma/|W|) sum_w chi_sigma(w^{-1}) rep(w)
std::vector<std::pair<std::string, Matrix<Cyclotomic>>> isotypic_projectors(
    const ReflectionGroup& g, const std::function<Matrix<Cyclotomic>(size_t)>& rep, bool check_rep = true);

// Scalar by which the sum of the reflections in each class acts on sigma.
std::vector<Cyclotomic> reflection_eigenvalue_sum(const ReflectionGroup& g, const Irrep& sigma);

// Multiplicity of sigma in a representation with the given character values.
Cyclotomic character_inner(const ReflectionGroup& g, const std::vector<Cyclotomic>& chi, const Irrep& sigma);

}  // namespace rca
