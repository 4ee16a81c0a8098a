#include <limroot/errors.hpp>
#include <limroot/linalg.hpp>

#include <algorithm>

namespace limroot {

Rat dot(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), "dot: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec add(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), "add: dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), "sub: dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scale(const Rat& c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

Vec neg(const Vec& v) { return scale(Rat(-1), v); }

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

Mat transpose(const Mat& m) {
    if (m.empty()) return {};
    Mat t(m[0].size(), Vec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

Vec mat_vec(const Mat& m, const Vec& v) {
    Vec r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    Mat bt = transpose(b);
    Mat r(a.size(), Vec(bt.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < bt.size(); ++j) r[i][j] = dot(a[i], bt[j]);
    return r;
}

Mat identity(std::size_t n) {
    Mat r(n, Vec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rat inv = Rat(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(Mat m) { return rref(m).size(); }

std::vector<Vec> nullspace(const Mat& m) {
    if (m.empty()) return {};
    std::size_t cols = m[0].size();
    Mat red = m;
    auto pivots = rref(red);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols, Rat(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Vec solve(const Mat& m, const Vec& b) {
    require(m.size() == b.size(), "solve: dimension mismatch");
    std::size_t cols = m.empty() ? 0 : m[0].size();
    Mat aug = m;
    for (std::size_t i = 0; i < m.size(); ++i) aug[i].push_back(b[i]);
    auto pivots = rref(aug);
    Vec x(cols, Rat(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        require(pivots[i] < cols, "solve: inconsistent system");
        x[pivots[i]] = aug[i][cols];
    }
    require(pivots.size() == cols, "solve: not full column rank");
    return x;
}

std::vector<Vec> orthogonal_complement(const std::vector<Vec>& space,
                                       const std::vector<Vec>& constraints) {
    if (space.empty()) return {};
    // x = space^T y; require constraints . x = 0, i.e. (C S^T) y = 0.
    Mat cs(constraints.size(), Vec(space.size()));
    for (std::size_t i = 0; i < constraints.size(); ++i)
        for (std::size_t j = 0; j < space.size(); ++j) cs[i][j] = dot(constraints[i], space[j]);
    std::vector<Vec> basis;
    if (constraints.empty()) {
        for (const auto& v : space) basis.push_back(v);
        return basis;
    }
    for (const auto& y : nullspace(cs)) {
        Vec x(space[0].size(), Rat(0));
        for (std::size_t j = 0; j < space.size(); ++j) x = add(x, scale(y[j], space[j]));
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace limroot
