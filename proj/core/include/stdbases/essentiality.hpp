#pragma once

#include "stdbases/graded.hpp"
#include "stdbases/hilbert.hpp"
#include "stdbases/ideal_ops.hpp"

#include <optional>
#include <random>
#include <set>

namespace stdbases {

/// Seeded RNG handed around explicitly; remembers its seed so randomized
/// verdicts can be replayed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}
    std::uint64_t seed() const { return seed_; }
    /// Uniform integer in [-halfwidth, halfwidth].
    int coefficient(int halfwidth) {
        std::uniform_int_distribution<int> dist(-halfwidth, halfwidth);
        return dist(engine_);
    }
    std::uint64_t raw() { return engine_(); }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

enum class Nature { Essential, Inessential };

struct InessentialCertificate {
    /// Smallest t with f * M^t ⊆ H.
    int exponent = 0;
    /// Per-variable smallest n with f * y_v^n ∈ H.
    std::vector<int> variable_exponents;
};

struct EssentialCertificate {
    /// Variable y_v with f ∉ (H : y_v^∞).
    int witness_variable = -1;
};

struct Verdict {
    Nature nature = Nature::Essential;
    std::optional<InessentialCertificate> inessential;
    std::optional<EssentialCertificate> essential;
    bool is_inessential() const { return nature == Nature::Inessential; }
};

/// The standing hypothesis: I^sat must be strictly contained in the
/// irrelevant ideal. Throws UnsupportedInputError otherwise.
void check_standing_hypothesis(const Ideal& I);

/// Nature of element i with respect to the basis: inessential iff f_i lies
/// in the saturation of the ideal of the other elements, decided variable by
/// variable; certificates carry the membership exponents (inessential) or a
/// witness variable (essential).
Verdict classify(const StandardBasis& basis, int i);

/// Replays the certificates of a verdict through direct membership calls.
bool reverify_verdict(const StandardBasis& basis, int i, const Verdict& verdict);

struct CrosscheckReport {
    Nature by_saturation;
    Nature by_hilbert;
    bool agree;
};

/// Recomputes the verdict by comparing the Hilbert polynomials of S/I and
/// S/H. A disagreement with the saturation route is an engine bug and throws
/// InternalCheckError; it is never returned silently.
CrosscheckReport classify_crosscheck(const StandardBasis& basis, int i);

/// Verifies that replacing f_i by f_i + h (h in the deleted ideal, same
/// degree) does not change the verdict. Returns true when verified.
bool nature_invariance_check(const StandardBasis& basis, int i, const Polynomial& h);

struct WitnessSearchResult {
    /// N: regular for S/H^sat and S/I^sat, with f ∉ (J : N^∞).
    Polynomial regular_form;
    /// L*_1..L*_n completing N to a spanning set of the irrelevant ideal.
    std::vector<Polynomial> completion;
    /// J = (B - {f}, L*_1 f, ..., L*_n f).
    Ideal obstruction_ideal;
    /// True when the input ideal was saturated and J was verified saturated.
    bool obstruction_saturated_checked = false;
};

/// Randomized search for an essentiality witness of an essential element;
/// the returned data re-verifies exactly. Empty on budget exhaustion (the
/// classify verdict stands regardless).
std::optional<WitnessSearchResult> essentiality_witness(const StandardBasis& basis, int i,
                                                        Rng& rng, int budget);

enum class SiRule { UniqueTopDegree, SatOfLowerDegree, ColumnCertified };

struct SiVerdict {
    enum class Status { Certified, Likely, NotSi };
    Status status = Status::Likely;
    std::optional<SiRule> rule;                  // Certified
    int trials = 0;                              // Likely
    std::uint64_t seed = 0;                      // Likely
    std::optional<StandardBasis> witness_basis;  // NotSi: f is essential here
};

/// Strong inessentiality of an inessential element: certified by one of the
/// degree-freeze rules when possible, otherwise Monte Carlo over the bases
/// (f_j + a_j f_i) that Prop-style basis changes reduce to.
SiVerdict strongly_inessential(const StandardBasis& basis, int i, int trials, Rng& rng);

/// Produces a basis containing f_i in which f_i is essential: first the
/// deterministic point trick (a small-height rational point where f_i does
/// not vanish but every lower-degree element does), then randomized
/// coefficient search. Empty on budget exhaustion, which is the expected
/// outcome for strongly inessential elements.
std::optional<StandardBasis> make_essential(const StandardBasis& basis, int i, int budget,
                                            Rng& rng);

/// Dual randomized search: a basis containing f_i in which f_i is
/// inessential. Refuses immediately (exact) when f_i is the unique element
/// of strictly maximal degree, since no degree-legal change touches its
/// deleted ideal.
std::optional<StandardBasis> make_inessential(const StandardBasis& basis, int i, int budget,
                                              Rng& rng);

struct EssentialityProfile {
    StandardBasis basis;            // final basis after the builder ran
    std::vector<Verdict> verdicts;  // per element of the final basis
    /// Per-index strong-(in)essentiality data: for e-maximal builds these
    /// cover the inessential elements, for e-minimal builds the essential
    /// ones (Certified there means strongly essential).
    std::map<int, SiVerdict> stability;
    /// nu_e (e-maximal) or mu_e (e-minimal): essential count per degree,
    /// including zero entries for every degree the basis touches.
    std::map<int, int> essential_per_degree;
    std::map<int, int> betti;
    /// False when any Likely verdict (budget exhaustion) is involved.
    bool counts_exact = true;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> notes;
};

/// Raises the essential count degree by degree until every inessential
/// element is certified or survives the sampling budget (Likely).
EssentialityProfile build_e_maximal(const StandardBasis& basis, int trials, Rng& rng);

/// Dual: lowers the essential count until every essential element resists.
EssentialityProfile build_e_minimal(const StandardBasis& basis, int trials, Rng& rng);

struct InessentialSet {
    std::vector<int> indices;  // ascending
    bool maximal = false;
    int cardinality() const { return static_cast<int>(indices.size()); }
};

/// sat(B - T) == sat(B), exactly.
bool is_inessential_set(const StandardBasis& basis, const std::vector<int>& indices);

/// Descending greedy scan over the inessential elements; the result is
/// inessential and maximal, and maximality is re-verified by attempting each
/// excluded element.
InessentialSet greedy_maximal_inessential_set(const StandardBasis& basis);

/// Exhaustive level-wise search over subsets of the inessential elements
/// (inessential sets are closed under subsets); returns every subset of
/// maximum cardinality. Refuses when the inessential count exceeds the
/// guard.
std::vector<InessentialSet> maximum_inessential_subsets(const StandardBasis& basis,
                                                        int size_guard = 20);

struct EBasisResult {
    StandardBasis basis;
    bool complete = false;          // every repair succeeded
    std::vector<int> unrepaired;    // indices that resisted the budget
    InessentialSet inessential_indices;  // inessential elements of the output
    /// Def-style check: the essential elements alone saturate to I^sat and
    /// the inessential ones form an inessential set.
    bool verified = false;
};

/// Builds an essential basis: keeps a maximal inessential set V and repairs
/// every inessential element outside V by adding multiples of it to the V
/// elements until it turns essential.
EBasisResult build_e_basis(const StandardBasis& basis, int trials, Rng& rng);

/// After removing an inessential set T, do the dehomogenizations of the kept
/// elements with respect to L still generate the dehomogenized ideal?
/// Checked by affine membership of every removed element's dehomogenization.
bool dehomogenized_basis_check(const StandardBasis& basis, const std::vector<int>& indices,
                               const Polynomial& linear_form);

/// Saturation by a nonzero linear form via a coordinate change onto a
/// variable.
Ideal saturation_by_linear_form(const Ideal& I, const Polynomial& linear_form);

/// Coefficient vector of a linear form in the ring's variable order.
std::vector<Rational> linear_form_coefficients(const Polynomial& linear_form);

}  // namespace stdbases
