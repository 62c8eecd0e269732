#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace cognum::markov {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::RowVectorXd;

struct Tolerances {
    double stochastic = 1e-12;  // row-sum check on validation
    double residual = 1e-10;    // max |pi P - pi| accepted for a stationary vector
    double power = 1e-12;       // power-iteration convergence threshold
    double agreement = 1e-9;    // linear solve vs power iteration
    std::size_t power_max_iterations = 1'000'000;
};

/// A validated row-stochastic matrix over named states (predicate ids).
class Chain {
public:
    const std::vector<std::string>& states() const noexcept { return states_; }
    const Matrix& matrix() const noexcept { return matrix_; }
    std::size_t size() const noexcept { return states_.size(); }

private:
    friend Chain validate_chain(std::vector<std::string>, const std::vector<std::vector<double>>&,
                                double);
    std::vector<std::string> states_;
    Matrix matrix_;
};

/// Throws DomainError "ShapeMismatch", "NegativeEntry" (also for NaN) or
/// "NotStochastic" naming the offending row and its sum.
Chain validate_chain(std::vector<std::string> states, const std::vector<std::vector<double>>& rows,
                     double tolerance = 1e-12);

/// P^n by repeated multiplication; P^0 is the identity.
Matrix n_step(const Chain& c, std::size_t n);

struct ClassStructure {
    std::vector<std::vector<std::size_t>> classes;  // each sorted; ordered by smallest member
    std::vector<bool> closed;
    std::vector<std::size_t> periods;
    std::vector<std::size_t> class_of;  // per state
    /// Edges of the quotient DAG: class a -> class b when some support edge leaves a into b.
    std::vector<std::pair<std::size_t, std::size_t>> quotient_edges;

    bool irreducible() const { return classes.size() == 1; }
};

/// Classes of mutually accessible states on the support digraph (p_ij > 0),
/// with closedness and period (gcd of cycle lengths) per class.
ClassStructure communicating_classes(const Chain& c);

enum class Recurrence { recurrent, transient };

const char* to_string(Recurrence r);

/// Finite chains: a state is recurrent iff its class is closed.
std::vector<Recurrence> classify_recurrence(const ClassStructure& cs);

struct Mindset {
    Vector distribution;         // normalized p_j
    Vector power_distribution;   // power-iteration cross-check
    std::size_t power_iterations = 0;
    double residual = 0.0;       // max |pi P - pi|
};

/// Stationary distribution of an irreducible aperiodic chain from a direct
/// linear solve of the balance equations, cross-checked by power iteration.
/// Throws "NotIrreducible", "Periodic", "NotConverged" or "SolverDisagreement".
Mindset stationary(const Chain& c, const Tolerances& tol = {});

/// Power iteration alone, starting from the uniform vector.
Vector power_iteration(const Chain& c, double tolerance, std::size_t max_iterations,
                       std::size_t* iterations = nullptr);

struct MindsetReport {
    ClassStructure structure;
    std::vector<Recurrence> recurrence;
    std::optional<Mindset> mindset;
    std::optional<std::string> failure;  // error name when no stationary distribution
    std::optional<std::string> failure_detail;
    /// (state index, probability), highest probability first.
    std::vector<std::pair<std::size_t, double>> ranking;
};

MindsetReport mindset_report(const Chain& c, const Tolerances& tol = {});

/// Empirical occupancy frequencies of a seeded trajectory of `steps` transitions.
Vector simulate(const Chain& c, std::size_t steps, std::uint64_t seed, std::size_t start = 0);

}  // namespace cognum::markov
