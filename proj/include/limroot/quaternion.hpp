#pragma once

#include <limroot/rational.hpp>

#include <array>

namespace limroot {

// Quaternion over Q; real and complex scalars are the subalgebras with
// x=y=z=0 resp. y=z=0. Matrices act on the left of right F-vector spaces.
struct Quat {
    Rat w{0}, x{0}, y{0}, z{0};

    Quat() = default;
    Quat(Rat w_, Rat x_ = 0, Rat y_ = 0, Rat z_ = 0)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    static Quat unit(int component) {
        Quat q;
        switch (component) {
            case 0: q.w = 1; break;
            case 1: q.x = 1; break;
            case 2: q.y = 1; break;
            case 3: q.z = 1; break;
        }
        return q;
    }

    Rat component(int c) const { return c == 0 ? w : c == 1 ? x : c == 2 ? y : z; }

    bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }

    Quat conj() const { return Quat(w, -x, -y, -z); }

    friend Quat operator+(const Quat& a, const Quat& b) {
        return Quat(a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z);
    }
    friend Quat operator-(const Quat& a, const Quat& b) {
        return Quat(a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z);
    }
    friend Quat operator-(const Quat& a) { return Quat(-a.w, -a.x, -a.y, -a.z); }
    friend Quat operator*(const Quat& a, const Quat& b) {
        return Quat(a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                    a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                    a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                    a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w);
    }
    friend Quat operator*(const Rat& c, const Quat& a) {
        return Quat(c * a.w, c * a.x, c * a.y, c * a.z);
    }
    friend bool operator==(const Quat& a, const Quat& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

}  // namespace limroot
