#include "cognum/markov.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "cognum/error.hpp"

namespace cognum::markov {

namespace {

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

}  // namespace

Chain validate_chain(std::vector<std::string> states, const std::vector<std::vector<double>>& rows,
                     double tolerance) {
    const std::size_t n = states.size();
    if (n == 0) throw DomainError("ShapeMismatch", "a chain needs at least one state");
    if (rows.size() != n) {
        throw DomainError("ShapeMismatch", std::to_string(n) + " states but " +
                                               std::to_string(rows.size()) + " rows");
    }
    Chain c;
    c.matrix_.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw DomainError("ShapeMismatch", "row " + std::to_string(i) + " has " +
                                                   std::to_string(rows[i].size()) + " entries");
        }
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double v = rows[i][j];
            if (!(v >= 0.0)) {
                throw DomainError("NegativeEntry", "entry (" + std::to_string(i) + ", " +
                                                       std::to_string(j) + ") = " + fmt(v));
            }
            sum += v;
            c.matrix_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
        }
        if (!(std::abs(sum - 1.0) <= tolerance)) {
            throw DomainError("NotStochastic",
                              "row " + std::to_string(i) + " sums to " + fmt(sum));
        }
    }
    c.states_ = std::move(states);
    return c;
}

Matrix n_step(const Chain& c, std::size_t n) {
    Matrix result = Matrix::Identity(c.matrix().rows(), c.matrix().cols());
    for (std::size_t k = 0; k < n; ++k) result = result * c.matrix();
    return result;
}

// ---------------------------------------------------------------------------
// Class structure
// ---------------------------------------------------------------------------

ClassStructure communicating_classes(const Chain& c) {
    const std::size_t n = c.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (c.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) > 0.0) {
                adj[i].push_back(j);
            }
        }
    }

    // Iterative Tarjan.
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
    std::vector<char> on_stack(n, 0);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> sccs;
    std::size_t counter = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        std::vector<std::pair<std::size_t, std::size_t>> frames{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            auto& [v, edge] = frames.back();
            if (edge < adj[v].size()) {
                const std::size_t w = adj[v][edge++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::vector<std::size_t> scc;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    scc.push_back(w);
                } while (w != v);
                sccs.push_back(std::move(scc));
            }
            const std::size_t finished = v;
            frames.pop_back();
            if (!frames.empty()) {
                auto& parent = frames.back().first;
                low[parent] = std::min(low[parent], low[finished]);
            }
        }
    }

    for (auto& scc : sccs) std::sort(scc.begin(), scc.end());
    std::sort(sccs.begin(), sccs.end());

    ClassStructure cs;
    cs.class_of.assign(n, 0);
    for (std::size_t k = 0; k < sccs.size(); ++k) {
        for (std::size_t s : sccs[k]) cs.class_of[s] = k;
    }

    std::set<std::pair<std::size_t, std::size_t>> quotient;
    cs.closed.assign(sccs.size(), true);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j : adj[i]) {
            if (cs.class_of[i] != cs.class_of[j]) {
                cs.closed[cs.class_of[i]] = false;
                quotient.emplace(cs.class_of[i], cs.class_of[j]);
            }
        }
    }
    cs.quotient_edges.assign(quotient.begin(), quotient.end());

    // Period: BFS levels inside the class; every internal edge u->v contributes
    // level[u] + 1 - level[v] to the gcd.
    for (const auto& scc : sccs) {
        const std::size_t k = cs.class_of[scc.front()];
        std::vector<long> level(n, -1);
        std::queue<std::size_t> q;
        level[scc.front()] = 0;
        q.push(scc.front());
        long g = 0;
        while (!q.empty()) {
            const std::size_t u = q.front();
            q.pop();
            for (std::size_t v : adj[u]) {
                if (cs.class_of[v] != k) continue;
                if (level[v] < 0) {
                    level[v] = level[u] + 1;
                    q.push(v);
                } else {
                    g = std::gcd(g, std::labs(level[u] + 1 - level[v]));
                }
            }
        }
        // A single state without a self-loop has no cycles; its period is
        // conventionally reported as 1.
        cs.periods.push_back(g == 0 ? 1 : static_cast<std::size_t>(g));
    }
    cs.classes = std::move(sccs);
    return cs;
}

const char* to_string(Recurrence r) {
    return r == Recurrence::recurrent ? "recurrent" : "transient";
}

std::vector<Recurrence> classify_recurrence(const ClassStructure& cs) {
    std::vector<Recurrence> out(cs.class_of.size());
    for (std::size_t s = 0; s < out.size(); ++s) {
        out[s] = cs.closed[cs.class_of[s]] ? Recurrence::recurrent : Recurrence::transient;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Stationary distribution
// ---------------------------------------------------------------------------

Vector power_iteration(const Chain& c, double tolerance, std::size_t max_iterations,
                       std::size_t* iterations) {
    const auto n = static_cast<Eigen::Index>(c.size());
    Vector pi = Vector::Constant(n, 1.0 / static_cast<double>(n));
    for (std::size_t it = 1; it <= max_iterations; ++it) {
        Vector next = pi * c.matrix();
        next /= next.sum();
        const double delta = (next - pi).cwiseAbs().maxCoeff();
        pi = std::move(next);
        if (delta <= tolerance) {
            if (iterations) *iterations = it;
            return pi;
        }
    }
    throw DomainError("NotConverged", "power iteration did not converge in " +
                                          std::to_string(max_iterations) + " iterations");
}

Mindset stationary(const Chain& c, const Tolerances& tol) {
    const ClassStructure cs = communicating_classes(c);
    if (!cs.irreducible()) {
        throw DomainError("NotIrreducible",
                          std::to_string(cs.classes.size()) + " communicating classes");
    }
    if (cs.periods.front() != 1) {
        throw DomainError("Periodic", "period " + std::to_string(cs.periods.front()));
    }

    // Balance equations pi (P - I) = 0, transposed, with the last equation
    // replaced by the normalization sum(pi) = 1.
    const auto n = static_cast<Eigen::Index>(c.size());
    Matrix a = c.matrix().transpose() - Matrix::Identity(n, n);
    a.row(n - 1).setOnes();
    Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
    b(n - 1) = 1.0;
    const Eigen::VectorXd solved = a.partialPivLu().solve(b);

    Mindset m;
    m.distribution = solved.transpose();
    m.distribution /= m.distribution.sum();
    m.residual = (m.distribution * c.matrix() - m.distribution).cwiseAbs().maxCoeff();
    m.power_distribution =
        power_iteration(c, tol.power, tol.power_max_iterations, &m.power_iterations);

    if (!(m.residual <= tol.residual)) {
        throw DomainError("NotConverged", "stationary residual " + fmt(m.residual));
    }
    const double gap = (m.distribution - m.power_distribution).cwiseAbs().maxCoeff();
    if (!(gap <= tol.agreement)) {
        throw DomainError("SolverDisagreement", "linear solve and power iteration differ by " +
                                                    fmt(gap));
    }
    return m;
}

MindsetReport mindset_report(const Chain& c, const Tolerances& tol) {
    MindsetReport r;
    r.structure = communicating_classes(c);
    r.recurrence = classify_recurrence(r.structure);
    try {
        r.mindset = stationary(c, tol);
        for (std::size_t j = 0; j < c.size(); ++j) {
            r.ranking.emplace_back(j, r.mindset->distribution(static_cast<Eigen::Index>(j)));
        }
        std::stable_sort(r.ranking.begin(), r.ranking.end(),
                         [](const auto& a, const auto& b) { return a.second > b.second; });
    } catch (const DomainError& e) {
        r.failure = e.name();
        r.failure_detail = e.what();
    }
    return r;
}

Vector simulate(const Chain& c, std::size_t steps, std::uint64_t seed, std::size_t start) {
    const std::size_t n = c.size();
    if (start >= n) throw DomainError("UnknownState", "start state out of range");

    std::vector<std::vector<double>> cumulative(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            acc += c.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            cumulative[i][j] = acc;
        }
    }

    std::mt19937_64 rng(seed);
    std::vector<std::size_t> visits(n, 0);
    std::size_t state = start;
    for (std::size_t t = 0; t < steps; ++t) {
        // 53 random bits scaled into [0, 1): identical on every platform.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * cumulative[state].back();
        const auto& row = cumulative[state];
        auto it = std::upper_bound(row.begin(), row.end(), u);
        state = it == row.end() ? n - 1 : static_cast<std::size_t>(it - row.begin());
        ++visits[state];
    }

    Vector occupancy(static_cast<Eigen::Index>(n));
    for (std::size_t j = 0; j < n; ++j) {
        occupancy(static_cast<Eigen::Index>(j)) =
            steps == 0 ? 0.0 : static_cast<double>(visits[j]) / static_cast<double>(steps);
    }
    return occupancy;
}

}  // namespace cognum::markov
