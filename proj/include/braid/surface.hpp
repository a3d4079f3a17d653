#pragma once

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "braid/cabling.hpp"
#include "braid/errors.hpp"
#include "braid/garside.hpp"
#include "braid/mixed.hpp"
#include "braid/word.hpp"
#include "braid/z2.hpp"

namespace braid {

/// The three families of closed-surface fundamental groups used as homomorphism sources.
enum class SurfaceKind {
    Orientable,         ///< genus m >= 1: <a_1..a_2m | [a_1,a_2]...[a_2m-1,a_2m]>
    NonOrientableEven,  ///< genus 2m+2, m >= 0: <u,v,a_1..a_2m | u v u v^-1 [a_1,a_2]...>
    NonOrientableOdd,   ///< genus 2m+1, m >= 1: <c,a_1..a_2m | c^2 [a_1,a_2]...>
};

/// A word in presentation generators: +g / -g for the g-th generator or its inverse,
/// 1-based in the order reported by SurfacePresentation::generator_names().
using GenWord = std::vector<int>;

/// A one-relator surface-group presentation equipped with a surjection theta to Z2.
///
/// theta is the data of a double covering of the surface; it must kill the relator
/// (automatic for these relators, still checked) and hit 1 on some generator.
class SurfacePresentation {
public:
    SurfacePresentation(SurfaceKind kind, int m, std::vector<Z2> theta)
        : kind_(kind), m_(m), theta_(std::move(theta)) {
        const int min_m = (kind == SurfaceKind::NonOrientableEven) ? 0 : 1;
        if (m_ < min_m) throw InvalidDescriptor("genus parameter out of range for this family");
        if (static_cast<int>(theta_.size()) != generator_count())
            throw InvalidDescriptor("theta must assign a value to every generator");
        Z2 relator_sum;
        for (int g : relator()) relator_sum += theta_[std::abs(g) - 1];
        if (!(relator_sum == z2_zero))
            throw InvalidDescriptor("theta does not kill the relator");
        bool onto = false;
        for (Z2 t : theta_) onto = onto || t == z2_one;
        if (!onto) throw ThetaNotSurjective("theta sends every generator to 0");
    }

    SurfaceKind kind() const { return kind_; }
    int genus_parameter() const { return m_; }

    int generator_count() const {
        switch (kind_) {
            case SurfaceKind::Orientable: return 2 * m_;
            case SurfaceKind::NonOrientableEven: return 2 + 2 * m_;
            case SurfaceKind::NonOrientableOdd: return 1 + 2 * m_;
        }
        return 0;
    }

    std::vector<std::string> generator_names() const {
        std::vector<std::string> names;
        if (kind_ == SurfaceKind::NonOrientableEven) {
            names.push_back("u");
            names.push_back("v");
        } else if (kind_ == SurfaceKind::NonOrientableOdd) {
            names.push_back("c");
        }
        for (int k = 1; k <= 2 * m_; ++k) names.push_back("a" + std::to_string(k));
        return names;
    }

    Z2 theta(int gen) const { return theta_[gen - 1]; }
    const std::vector<Z2>& theta() const { return theta_; }

    /// theta of a word, letterwise.
    Z2 theta_of(const GenWord& w) const {
        Z2 s;
        for (int g : w) s += theta(std::abs(g));
        return s;
    }

    /// The single defining relator.
    GenWord relator() const {
        GenWord r;
        int first_a = 1;
        if (kind_ == SurfaceKind::NonOrientableEven) {
            r.insert(r.end(), {1, 2, 1, -2});
            first_a = 3;
        } else if (kind_ == SurfaceKind::NonOrientableOdd) {
            r.insert(r.end(), {1, 1});
            first_a = 2;
        }
        for (int p = 0; p < m_; ++p) {
            const int x = first_a + 2 * p, y = x + 1;
            r.insert(r.end(), {x, y, -x, -y});
        }
        return r;
    }

    bool operator==(const SurfacePresentation&) const = default;

private:
    SurfaceKind kind_;
    int m_;
    std::vector<Z2> theta_;
};

/// theta of the distinguished generator whose square-class drives the classification:
/// u for the even non-orientable family, c for the odd one; absent for orientable
/// sources (where the distinguished element is trivial).
inline std::optional<Z2> theta_hat_delta(const SurfacePresentation& p) {
    switch (p.kind()) {
        case SurfaceKind::Orientable: return std::nullopt;
        case SurfaceKind::NonOrientableEven:
        case SurfaceKind::NonOrientableOdd: return p.theta(1);
    }
    return std::nullopt;
}

namespace detail {

inline GenWord free_reduce_gen(const GenWord& w) {
    GenWord out;
    for (int g : w) {
        if (!out.empty() && out.back() == -g)
            out.pop_back();
        else
            out.push_back(g);
    }
    return out;
}

}  // namespace detail

/// Index-2 subgroup generators for ker(theta), from the transversal {1, t}:
/// for theta(g)=0 the words g and t g t^-1, for theta(g)=1 the words g t^-1 and t g.
/// Freely trivial words are dropped.  The returned words generate the kernel.
inline std::vector<GenWord> schreier_kernel_generators(const SurfacePresentation& p,
                                                       std::optional<int> transversal = {}) {
    int t = 0;
    if (transversal) {
        t = *transversal;
        if (t < 1 || t > p.generator_count() || !(p.theta(t) == z2_one))
            throw ThetaNotSurjective("transversal generator must have theta = 1");
    } else {
        for (int g = 1; g <= p.generator_count(); ++g)
            if (p.theta(g) == z2_one) {
                t = g;
                break;
            }
        if (t == 0) throw ThetaNotSurjective("no generator with theta = 1");
    }

    std::vector<GenWord> out;
    auto add = [&out](GenWord w) {
        w = detail::free_reduce_gen(w);
        if (!w.empty()) out.push_back(std::move(w));
    };
    for (int g = 1; g <= p.generator_count(); ++g) {
        if (p.theta(g) == z2_zero) {
            add({g});
            add({t, g, -t});
        } else {
            add({g, -t});
            add({t, g});
        }
    }
    return out;
}

/// A homomorphism candidate from a surface group into B^2_{n,n}, given by generator
/// images on 2n strands.  Every image must preserve or swap the blocks.
class GroupHom {
public:
    GroupHom(SurfacePresentation source, int n, std::vector<BraidWord> images)
        : source_(std::move(source)), n_(n), images_(std::move(images)) {
        if (n_ < 1) throw IndexError("block size must be >= 1");
        if (static_cast<int>(images_.size()) != source_.generator_count())
            throw ImageNotInB2nn("one image per generator required");
        const MixedContext ctx(n_);
        for (const BraidWord& w : images_)
            if (!in_bnn2(w, ctx))
                throw ImageNotInB2nn("a generator image neither preserves nor swaps the blocks");
    }

    const SurfacePresentation& source() const { return source_; }
    int block_size() const { return n_; }
    const BraidWord& image(int gen) const { return images_[gen - 1]; }
    const std::vector<BraidWord>& images() const { return images_; }

    /// Image of a word in the generators.
    BraidWord apply(const GenWord& w) const {
        BraidWord r(2 * n_);
        for (int g : w) r = compose(r, g > 0 ? image(g) : inverse(image(-g)));
        return r;
    }

private:
    SurfacePresentation source_;
    int n_;
    std::vector<BraidWord> images_;
};

/// The three facts consumed by the classification, reported independently.
struct VerifyReport {
    bool well_defined;    ///< the relator image is trivial, so the map is a homomorphism
    bool commutes;        ///< pi_sign(image(g)) = theta(g) for every generator
    bool kernel_in_pure;  ///< every kernel generator image is a pure braid

    bool operator==(const VerifyReport&) const = default;
};

/// Checks the three facts for a homomorphism candidate.
inline VerifyReport verify_hom(const GroupHom& h) {
    const MixedContext ctx(h.block_size());
    VerifyReport r{};
    r.well_defined = is_trivial(h.apply(h.source().relator()));
    r.commutes = true;
    for (int g = 1; g <= h.source().generator_count(); ++g)
        if (!(pi_sign(h.image(g), ctx) == h.source().theta(g))) r.commutes = false;
    r.kernel_in_pure = true;
    for (const GenWord& w : schreier_kernel_generators(h.source()))
        if (!is_pure(h.apply(w))) r.kernel_in_pure = false;
    return r;
}

/// g -> omega_n^{theta(g)}.  Requires theta(delta) = 0; then the relator image is a
/// commutator of powers of one element and the kernel lands in even powers, which are
/// pure.  verify_hom yields (true, true, true).
inline GroupHom hom_omega_power(const SurfacePresentation& p, int n) {
    if (theta_hat_delta(p).value_or(z2_zero) == z2_one)
        throw HypothesisNotMet("requires theta(delta) = 0");
    const BraidWord w = omega(n);
    std::vector<BraidWord> images;
    for (int g = 1; g <= p.generator_count(); ++g)
        images.push_back(power(w, p.theta(g).value()));
    return GroupHom(p, n, std::move(images));
}

/// g -> (s_1 omega_n)^{theta(g)}, n >= 2.  Requires theta(delta) = 0; the square of
/// s_1 omega_n is not pure, so verify_hom yields (true, true, false).
inline GroupHom hom_sigma1_omega_power(const SurfacePresentation& p, int n) {
    if (n < 2) throw HypothesisNotMet("requires n >= 2");
    if (theta_hat_delta(p).value_or(z2_zero) == z2_one)
        throw HypothesisNotMet("requires theta(delta) = 0");
    const BraidWord w = compose(BraidWord(2 * n, {1}), omega(n));
    std::vector<BraidWord> images;
    for (int g = 1; g <= p.generator_count(); ++g)
        images.push_back(power(w, p.theta(g).value()));
    return GroupHom(p, n, std::move(images));
}

/// The four-strand witness for theta(delta) = 1, built from the half twist D_4 and
/// Omega = s_2 s_3 s_1^-1 s_2^-1 (both block-swapping; D_4 Omega D_4^-1 = Omega^-1).
/// Three cases by source family and theta:
///   even non-orientable:            u -> Omega, v -> D_4 Omega^{1-theta(v)}
///   odd, theta(a_1) or theta(a_2)=1: c -> Omega, a_1 -> D_4^{theta(a_2)} Omega^{theta(a_1)+theta(a_2)-2},
///                                    a_2 -> D_4^{1-theta(a_2)} Omega
///   odd, theta(a_1)=theta(a_2)=0:    c -> Omega, a_1 -> s_2 Omega^-1 s_2^-1, a_2 -> s_2 s_3^2 s_2^-1
/// Remaining a_k -> Omega^{theta(a_k)}.  verify_hom yields (true, true, false).
inline GroupHom hom_theta1_four_strand(const SurfacePresentation& p) {
    if (!(theta_hat_delta(p).value_or(z2_zero) == z2_one))
        throw HypothesisNotMet("requires theta(delta) = 1");
    const BraidWord Omega(4, {2, 3, -1, -2});
    const BraidWord D4 = delta(4);
    auto omega_pow = [&Omega](int e) { return power(Omega, e); };

    std::vector<BraidWord> images(p.generator_count(), BraidWord(4));
    int first_a = 0;
    if (p.kind() == SurfaceKind::NonOrientableEven) {
        images[0] = Omega;
        images[1] = compose(D4, omega_pow(1 - p.theta(2).value()));
        first_a = 3;
    } else {
        // Odd non-orientable; the family has m >= 1, so a_1 and a_2 exist.
        images[0] = Omega;
        const BraidWord s2(4, {2});
        const int i1 = p.theta(2).value(), i2 = p.theta(3).value();
        if (i1 == 0 && i2 == 0) {
            images[1] = s2 * inverse(Omega) * inverse(s2);
            images[2] = s2 * BraidWord(4, {3, 3}) * inverse(s2);
        } else {
            images[1] = compose(power(D4, i2), omega_pow(i1 + i2 - 2));
            images[2] = compose(power(D4, 1 - i2), Omega);
        }
        first_a = 4;
    }
    for (int g = first_a; g <= p.generator_count(); ++g)
        images[g - 1] = omega_pow(p.theta(g).value());
    return GroupHom(p, 2, std::move(images));
}

/// The even-n witness for theta(delta) = 1: the four-strand witness cabled by n/2.
/// verify_hom yields (true, true, false).
inline GroupHom hom_theta1_even(const SurfacePresentation& p, int n) {
    if (n < 2 || n % 2 != 0) throw HypothesisNotMet("requires even n >= 2");
    const GroupHom base = hom_theta1_four_strand(p);
    std::vector<BraidWord> images;
    for (const BraidWord& w : base.images()) images.push_back(cable(w, n / 2));
    return GroupHom(p, n, std::move(images));
}

}  // namespace braid
