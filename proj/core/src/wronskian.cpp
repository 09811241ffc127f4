#include "awnev/wronskian.hpp"

#include "awnev/errors.hpp"

namespace awnev {

FunctionTuple::FunctionTuple(std::vector<RatFunc> fs, AwContext c)
    : entries(std::move(fs)), ctx(std::move(c)) {
    if (entries.empty()) throw BadArity("FunctionTuple: needs at least one entry");
}

namespace wron {

namespace {

RatFunc det_cofactor(const std::vector<std::vector<RatFunc>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    RatFunc acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<RatFunc>> minor(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            minor[r - 1].reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) minor[r - 1].push_back(m[r][c]);
        }
        RatFunc term = m[0][j] * det_cofactor(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// One-step Bareiss: every division is exact over the previous pivot.
RatFunc det_bareiss(std::vector<std::vector<RatFunc>> m) {
    const std::size_t n = m.size();
    RatFunc prev = RatFunc::constant(Rat(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return RatFunc();  // singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = RatFunc();
        }
        prev = m[k][k];
    }
    RatFunc d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

}  // namespace

RatFunc determinant(std::vector<std::vector<RatFunc>> m) {
    if (m.empty()) throw BadArity("determinant: empty matrix");
    for (const auto& row : m)
        if (row.size() != m.size()) throw BadArity("determinant: matrix not square");
    if (m.size() <= 4) return det_cofactor(m);
    return det_bareiss(std::move(m));
}

RatFunc wronskian(const FunctionTuple& fs) {
    const int n = fs.order();
    std::vector<std::vector<RatFunc>> m(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        m[static_cast<std::size_t>(i)].reserve(fs.entries.size());
        for (const RatFunc& f : fs.entries)
            m[static_cast<std::size_t>(i)].push_back(ops::mixed(f, n, i, fs.ctx));
    }
    return determinant(std::move(m));
}

RatFunc wronskian_shift_form(const FunctionTuple& fs) {
    const int n = fs.order();
    std::vector<std::vector<RatFunc>> m(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        m[static_cast<std::size_t>(k)].reserve(fs.entries.size());
        for (const RatFunc& f : fs.entries)
            m[static_cast<std::size_t>(k)].push_back(ops::shift(f, n - 2 * k, fs.ctx));
    }
    RatFunc det = determinant(std::move(m));
    // prod over 1 <= j <= i <= n of -1 / (eta^{i-2j+2} x - eta^{i-2j} x)
    RatFunc x = RatFunc::x_model();
    RatFunc prefactor = RatFunc::constant(Rat(1));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= i; ++j) {
            RatFunc gap = ops::shift(x, i - 2 * j + 2, fs.ctx) - ops::shift(x, i - 2 * j, fs.ctx);
            prefactor = -(prefactor / gap);
        }
    }
    return det * prefactor;
}

RatFunc wronskian_sign_form(const FunctionTuple& fs, const std::vector<int>& deltas) {
    const int n = fs.order();
    if (static_cast<int>(deltas.size()) != n)
        throw BadArity("wronskian_sign_form: need n sign choices");
    for (int d : deltas)
        if (d != 1 && d != -1) throw DomainError("wronskian_sign_form: signs must be +1 or -1");
    std::vector<std::vector<RatFunc>> m(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        m[static_cast<std::size_t>(i)].reserve(fs.entries.size());
        for (const RatFunc& f : fs.entries) {
            RatFunc di = ops::aw_diff_iter(f, i, fs.ctx);
            long long k = i < n ? static_cast<long long>(deltas[static_cast<std::size_t>(i)]) *
                                      (n - i)
                                : 0;
            m[static_cast<std::size_t>(i)].push_back(ops::shift(di, k, fs.ctx));
        }
    }
    return determinant(std::move(m));
}

bool verify_properties(const FunctionTuple& fs, const RatFunc& g, const std::vector<Rat>& cs) {
    const int n = fs.order();
    if (static_cast<int>(cs.size()) != n + 1)
        throw BadArity("verify_properties: need n+1 scalars");
    for (const Rat& c : cs)
        if (c == 0) throw DomainError("verify_properties: scalars must be nonzero");
    const AwContext& ctx = fs.ctx;
    const RatFunc w = wronskian(fs);

    // (i) scalar multilinearity
    std::vector<RatFunc> scaled;
    Rat prod(1);
    for (int j = 0; j <= n; ++j) {
        scaled.push_back(fs.entries[static_cast<std::size_t>(j)] *
                         cs[static_cast<std::size_t>(j)]);
        prod *= cs[static_cast<std::size_t>(j)];
    }
    if (wronskian(FunctionTuple(scaled, ctx)) != w * prod) return false;

    // (ii) W(1, f1, ..., fn) = W(D_q f1, ..., D_q fn)
    if (n >= 1) {
        std::vector<RatFunc> with_one = {RatFunc::constant(Rat(1))};
        std::vector<RatFunc> diffs;
        for (int j = 1; j <= n; ++j) {
            with_one.push_back(fs.entries[static_cast<std::size_t>(j)]);
            diffs.push_back(ops::aw_diff(fs.entries[static_cast<std::size_t>(j)], ctx));
        }
        if (wronskian(FunctionTuple(with_one, ctx)) != wronskian(FunctionTuple(diffs, ctx)))
            return false;
    }

    // (iii) common-factor extraction through the shift product
    {
        std::vector<RatFunc> mult;
        RatFunc shift_prod = RatFunc::constant(Rat(1));
        for (int j = 0; j <= n; ++j)
            mult.push_back(fs.entries[static_cast<std::size_t>(j)] * g);
        for (int k = 0; k <= n; ++k) shift_prod = shift_prod * ops::shift(g, n - 2 * k, ctx);
        if (wronskian(FunctionTuple(mult, ctx)) != shift_prod * w) return false;
    }

    // (iv) reduction by the leading entry
    if (n >= 1) {
        const RatFunc& f0 = fs.entries[0];
        if (f0.is_zero()) throw ZeroDivisorError("verify_properties: f0 must not vanish");
        std::vector<RatFunc> quotients;
        for (int j = 1; j <= n; ++j)
            quotients.push_back(
                ops::aw_diff(fs.entries[static_cast<std::size_t>(j)] / f0, ctx));
        RatFunc shift_prod = RatFunc::constant(Rat(1));
        for (int k = 0; k <= n; ++k) shift_prod = shift_prod * ops::shift(f0, n - 2 * k, ctx);
        if (w != shift_prod * wronskian(FunctionTuple(quotients, ctx))) return false;
    }
    return true;
}

int exact_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            Rat factor = m[r][col] / m[rank][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

bool linearly_independent(const std::vector<XPoly>& ps) {
    if (ps.empty()) return true;
    int maxdeg = 0;
    for (const XPoly& p : ps) maxdeg = std::max(maxdeg, p.degree());
    if (maxdeg < 0) return false;  // all zero
    // Rows = polynomials, columns = monomial coefficients.
    std::vector<std::vector<Rat>> m;
    for (const XPoly& p : ps) {
        std::vector<Rat> row(static_cast<std::size_t>(maxdeg) + 1, Rat(0));
        for (int k = 0; k <= p.degree(); ++k) row[static_cast<std::size_t>(k)] = p.coeff(k);
        m.push_back(std::move(row));
    }
    return exact_rank(std::move(m)) == static_cast<int>(ps.size());
}

}  // namespace wron

}  // namespace awnev
