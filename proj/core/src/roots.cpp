#include "awnev/roots.hpp"

#include <Eigen/Dense>

#include <algorithm>

#include "awnev/errors.hpp"

namespace awnev {

int order_at(const Laurent& g, const GaussRat& z0) {
    if (g.is_zero()) throw ZeroFunctionError("order_at: zero function");
    if (z0.is_zero()) throw DomainError("order_at: z0 must be nonzero");
    std::vector<Rat> d = g.dense();
    XPoly p(std::move(d));
    return order_at(p, z0);
}

int zero_order_at(const RatFunc& f, const GaussRat& z0) {
    if (f.is_zero()) throw ZeroFunctionError("zero_order_at: zero function");
    if (order_at(f.den(), z0) > 0) return 0;
    return order_at(f.num(), z0);
}

namespace {

std::vector<std::pair<std::complex<double>, int>> cluster_roots(
    std::vector<std::complex<double>> roots, double tol) {
    std::vector<std::pair<std::complex<double>, int>> out;
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    std::vector<bool> used(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        // Greedy cluster: everything within tol of the running centroid.
        std::complex<double> sum = roots[i];
        int count = 1;
        used[i] = true;
        bool grew = true;
        while (grew) {
            grew = false;
            std::complex<double> centroid = sum / static_cast<double>(count);
            for (std::size_t j = 0; j < roots.size(); ++j) {
                if (used[j]) continue;
                if (std::abs(roots[j] - centroid) <= tol) {
                    sum += roots[j];
                    ++count;
                    used[j] = true;
                    grew = true;
                }
            }
        }
        out.emplace_back(sum / static_cast<double>(count), count);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::abs(a.first) < std::abs(b.first);
    });
    return out;
}

std::vector<std::complex<double>> companion_eigenvalues(const std::vector<Rat>& coeffs) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    if (n <= 0) return {};
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    double lead = to_double(coeffs.back());
    for (int i = 0; i < n; ++i)
        companion(i, n - 1) = -to_double(coeffs[static_cast<std::size_t>(i)]) / lead;
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) roots[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    return roots;
}

std::vector<Rat> dense_derivative(const std::vector<Rat>& p) {
    if (p.size() <= 1) return {};
    std::vector<Rat> out(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i)
        out[i - 1] = p[i] * Rat(static_cast<long long>(i));
    return out;
}

// Exact square-free split, then eigenvalues per multiplicity class. A
// repeated root perturbs the raw eigenvalues far beyond any reasonable
// cluster tolerance, so the multiplicity structure has to come from exact
// gcds rather than from clustering alone.
std::vector<std::pair<std::complex<double>, int>> companion_roots(
    const std::vector<Rat>& coeffs, double tol) {
    std::vector<std::pair<std::complex<double>, int>> out;
    std::vector<Rat> g = dense::gcd(coeffs, dense_derivative(coeffs));
    std::vector<Rat> w = dense::divmod(coeffs, g).first;  // distinct roots, simple
    int multiplicity = 1;
    while (dense::degree(w) > 0) {
        std::vector<Rat> y = dense::gcd(w, g);
        std::vector<Rat> z = dense::divmod(w, y).first;  // roots of exactly this class
        if (dense::degree(z) > 0) {
            auto clustered = cluster_roots(companion_eigenvalues(z), tol);
            for (const auto& [root, count] : clustered)
                out.emplace_back(root, count * multiplicity);
        }
        w = std::move(y);
        g = dense::divmod(g, w.empty() ? std::vector<Rat>{Rat(1)} : w).first;
        ++multiplicity;
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::abs(a.first) < std::abs(b.first);
    });
    return out;
}

}  // namespace

std::vector<std::pair<std::complex<double>, int>> roots_numeric(const Laurent& g,
                                                                double cluster_tol) {
    if (g.is_zero()) throw ZeroFunctionError("roots_numeric: zero function");
    return companion_roots(g.dense(), cluster_tol);
}

std::vector<std::pair<std::complex<double>, int>> roots_numeric(const XPoly& p,
                                                                double cluster_tol) {
    if (p.is_zero()) throw ZeroFunctionError("roots_numeric: zero polynomial");
    return companion_roots(p.coeffs(), cluster_tol);
}

}  // namespace awnev
