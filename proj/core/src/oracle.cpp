#include "glnq/oracle.hpp"

#include <algorithm>

#include "glnq/check.hpp"

namespace glnq::oracle {

Gl2Brute::Gl2Brute(unsigned q)
    : q_(q), Fq_(q, 1), Fq2_(q, 2), ring_(q * (std::uint64_t(q) * q - 1)) {
    GLNQ_REQUIRE(q == 3 || q == 5 || q == 7, "brute-force oracle runs at q in {3,5,7}");
    // Enumerate the group in packed order.
    index_of_.assign(std::uint64_t(q) * q * q * q, UINT32_MAX);
    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b)
            for (unsigned c = 0; c < q; ++c)
                for (unsigned d = 0; d < q; ++d) {
                    unsigned det = Fq_.sub(Fq_.mul(a, d), Fq_.mul(b, c));
                    if (det == 0) continue;
                    Mat2 m{a, b, c, d};
                    index_of_[pack(m)] = static_cast<std::uint32_t>(elements_.size());
                    elements_.push_back(m);
                }
    std::uint64_t expected = (std::uint64_t(q) * q - 1) * (std::uint64_t(q) * q - q);
    GLNQ_INTERNAL(elements_.size() == expected, "group order mismatch");

    // Conjugacy classes by orbit sweep in enumeration order.
    class_of_.assign(elements_.size(), UINT32_MAX);
    for (std::uint32_t i = 0; i < elements_.size(); ++i) {
        if (class_of_[i] != UINT32_MAX) continue;
        std::uint32_t cls = static_cast<std::uint32_t>(classes_.size());
        ClassData data;
        data.rep = elements_[i];
        std::vector<Mat2> conj(elements_.size());
        std::uint32_t size = 0;
        for (std::uint32_t x = 0; x < elements_.size(); ++x) {
            Mat2 t = mul(mul(inverse(elements_[x]), elements_[i]), elements_[x]);
            conj[x] = t;
            std::uint32_t ti = index_of(t);
            if (class_of_[ti] == UINT32_MAX) {
                class_of_[ti] = cls;
                ++size;
            }
        }
        data.size = size;
        GLNQ_INTERNAL(elements_.size() % size == 0, "class size divides |G|");
        data.centralizer_order = elements_.size() / size;
        classes_.push_back(data);
        conj_by_class_.push_back(std::move(conj));
    }
    GLNQ_INTERNAL(classes_.size() == std::uint64_t(q) * q - 1,
                  "GL_2(F_q) has q^2 - 1 conjugacy classes");

    sq_class_count_.assign(classes_.size(), 0);
    for (const Mat2& g : elements_) ++sq_class_count_[class_of(mul(g, g))];
}

std::uint32_t Gl2Brute::pack(const Mat2& m) const {
    return ((m.a * q_ + m.b) * q_ + m.c) * q_ + m.d;
}

std::uint32_t Gl2Brute::index_of(const Mat2& m) const {
    std::uint32_t i = index_of_[pack(m)];
    GLNQ_INTERNAL(i != UINT32_MAX, "matrix is not invertible");
    return i;
}

unsigned Gl2Brute::class_of(const Mat2& g) const { return class_of_[index_of(g)]; }

Mat2 Gl2Brute::mul(const Mat2& x, const Mat2& y) const {
    return Mat2{Fq_.add(Fq_.mul(x.a, y.a), Fq_.mul(x.b, y.c)),
                Fq_.add(Fq_.mul(x.a, y.b), Fq_.mul(x.b, y.d)),
                Fq_.add(Fq_.mul(x.c, y.a), Fq_.mul(x.d, y.c)),
                Fq_.add(Fq_.mul(x.c, y.b), Fq_.mul(x.d, y.d))};
}

Mat2 Gl2Brute::inverse(const Mat2& x) const {
    unsigned det = Fq_.sub(Fq_.mul(x.a, x.d), Fq_.mul(x.b, x.c));
    unsigned di = Fq_.inv(det);
    return Mat2{Fq_.mul(x.d, di), Fq_.mul(Fq_.neg(x.b), di),
                Fq_.mul(Fq_.neg(x.c), di), Fq_.mul(x.a, di)};
}

unsigned Gl2Brute::class_h1() const { return class_of(Mat2{q_ - 1, 0, 0, 1}); }
unsigned Gl2Brute::class_h2() const { return class_of(Mat2{q_ - 1, 0, 0, q_ - 1}); }
unsigned Gl2Brute::class_tx() const {
    return class_of(Mat2{Fq_.least_nonsquare(), 0, 0, 1});
}

std::uint64_t Gl2Brute::subgroup_order(Subgroup H) const {
    switch (H) {
        case Subgroup::borel: return std::uint64_t(q_) * (q_ - 1) * (q_ - 1);
        case Subgroup::zn: return std::uint64_t(q_) * (q_ - 1);
        case Subgroup::nonsplit_torus: return std::uint64_t(q_) * q_ - 1;
        case Subgroup::diagonal_torus: return std::uint64_t(q_ - 1) * (q_ - 1);
    }
    return 0;
}

bool Gl2Brute::in_subgroup(Subgroup H, const Mat2& g) const {
    switch (H) {
        case Subgroup::borel: return g.c == 0;
        case Subgroup::zn: return g.c == 0 && g.a == g.d;
        case Subgroup::nonsplit_torus: {
            // multiplication by x + y t in the basis {1, t}, where
            // t^2 = -c1 t - c0: the matrix is [[x, -c0 y], [y, x - c1 y]]
            unsigned c0 = Fq2_.modulus()[0], c1 = Fq2_.modulus()[1];
            return g.b == Fq_.mul(Fq_.neg(c0), g.c) &&
                   g.d == Fq_.sub(g.a, Fq_.mul(c1, g.c));
        }
        case Subgroup::diagonal_torus: return g.b == 0 && g.c == 0;
    }
    return false;
}

unsigned Gl2Brute::fq2_elem(unsigned x, unsigned y) const { return x + q_ * y; }

std::uint64_t Gl2Brute::sub_char_exp(const SubChar& sc, const Mat2& g) const {
    const std::uint64_t M = ring_.order();
    const std::uint64_t scale_q = M / (q_ - 1);            // zeta_{q-1} = zeta_M^scale_q
    const std::uint64_t scale_q2 = M / (std::uint64_t(q_) * q_ - 1); // = p
    const std::uint64_t scale_p = M / q_;                  // zeta_p = zeta_M^scale_p
    switch (sc.H) {
        case Subgroup::borel:
        case Subgroup::diagonal_torus:
            return (sc.j1 * Fq_.dlog(g.a) % M * (scale_q % M) +
                    sc.j2 * Fq_.dlog(g.d) % M * (scale_q % M)) % M;
        case Subgroup::zn: {
            // g = aI n(u) with u = b / a; theta on the center, zeta_p^u on N.
            unsigned u = Fq_.mul(g.b, Fq_.inv(g.a));
            std::uint64_t e = sc.j1 * Fq2_.dlog(fq2_elem(g.a, 0)) % M * scale_q2 % M;
            e = (e + std::uint64_t(u) * scale_p) % M;
            return e;
        }
        case Subgroup::nonsplit_torus: {
            unsigned z = fq2_elem(g.a, g.c);
            return sc.j1 * Fq2_.dlog(z) % M * scale_q2 % M;
        }
    }
    return 0;
}

Gl2Brute::ClassFunction Gl2Brute::induced_character(const SubChar& sc) const {
    ClassFunction out(classes_.size(), CycInt(ring_));
    std::vector<std::int64_t> counts(ring_.order());
    for (std::size_t c = 0; c < classes_.size(); ++c) {
        std::fill(counts.begin(), counts.end(), 0);
        for (const Mat2& t : conj_by_class_[c])
            if (in_subgroup(sc.H, t)) ++counts[sub_char_exp(sc, t)];
        CycInt v(ring_);
        for (std::uint64_t k = 0; k < ring_.order(); ++k)
            if (counts[k]) v.add_zeta_multiple(k, counts[k]);
        v.divexact(static_cast<std::int64_t>(subgroup_order(sc.H)));
        out[c] = v;
    }
    return out;
}

Gl2Brute::ClassFunction Gl2Brute::cuspidal_character(std::uint64_t theta) const {
    std::uint64_t N2 = std::uint64_t(q_) * q_ - 1;
    GLNQ_REQUIRE(theta * q_ % N2 != theta % N2, "theta must be regular");
    ClassFunction big = induced_character(SubChar{Subgroup::zn, theta, 0});
    ClassFunction small = induced_character(SubChar{Subgroup::nonsplit_torus, theta, 0});
    ClassFunction out(classes_.size(), CycInt(ring_));
    for (std::size_t c = 0; c < classes_.size(); ++c) out[c] = big[c] - small[c];
    GLNQ_INTERNAL(degree_of(out) == static_cast<std::int64_t>(q_) - 1,
                  "cuspidal degree must be q - 1");
    GLNQ_INTERNAL(inner_product(out, out).as_integer() == 1,
                  "cuspidal character must be irreducible");
    return out;
}

CycInt Gl2Brute::inner_product(const ClassFunction& a, const ClassFunction& b) const {
    CycInt acc(ring_);
    for (std::size_t c = 0; c < classes_.size(); ++c) {
        CycInt term = a[c] * b[c].conjugate();
        term.scale(static_cast<std::int64_t>(classes_[c].size));
        acc += term;
    }
    acc.divexact(static_cast<std::int64_t>(group_order()));
    return acc;
}

int Gl2Brute::frobenius_schur(const ClassFunction& chi) const {
    GLNQ_REQUIRE(inner_product(chi, chi).as_integer() == 1,
                 "Frobenius-Schur needs an irreducible character");
    CycInt acc(ring_);
    for (std::size_t c = 0; c < classes_.size(); ++c) {
        CycInt term = chi[c];
        term.scale(sq_class_count_[c]);
        acc += term;
    }
    acc.divexact(static_cast<std::int64_t>(group_order()));
    std::int64_t v = acc.as_integer();
    GLNQ_INTERNAL(v == -1 || v == 0 || v == 1, "indicator out of range");
    return static_cast<int>(v);
}

bool Gl2Brute::is_real_valued(const ClassFunction& chi) const {
    for (const CycInt& v : chi)
        if (!(v == v.conjugate())) return false;
    return true;
}

std::int64_t Gl2Brute::degree_of(const ClassFunction& chi) const {
    return chi[class_identity()].as_integer();
}

Monomial Gl2Brute::det_induced(const SubChar& sc, const Mat2& g) const {
    // Right cosets H x, reps in enumeration order.
    std::vector<std::uint32_t> coset_of(elements_.size(), UINT32_MAX);
    std::vector<std::uint32_t> reps;
    std::vector<Mat2> members;
    members.reserve(subgroup_order(sc.H));
    for (const Mat2& h : elements_)
        if (in_subgroup(sc.H, h)) members.push_back(h);
    GLNQ_INTERNAL(members.size() == subgroup_order(sc.H), "subgroup order mismatch");
    for (std::uint32_t i = 0; i < elements_.size(); ++i) {
        if (coset_of[i] != UINT32_MAX) continue;
        std::uint32_t id = static_cast<std::uint32_t>(reps.size());
        reps.push_back(i);
        for (const Mat2& h : members) coset_of[index_of(mul(h, elements_[i]))] = id;
    }
    // x_i g = h_i x_{rho(i)}
    std::vector<std::uint32_t> rho(reps.size());
    std::uint64_t exp_sum = 0;
    const std::uint64_t M = ring_.order();
    for (std::uint32_t i = 0; i < reps.size(); ++i) {
        Mat2 y = mul(elements_[reps[i]], g);
        std::uint32_t j = coset_of[index_of(y)];
        rho[i] = j;
        Mat2 h = mul(y, inverse(elements_[reps[j]]));
        GLNQ_INTERNAL(in_subgroup(sc.H, h), "cocycle must land in H");
        exp_sum = (exp_sum + sub_char_exp(sc, h)) % M;
    }
    // sign of rho by cycle count
    std::vector<bool> seen(rho.size(), false);
    unsigned cycles = 0;
    for (std::uint32_t i = 0; i < rho.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::uint32_t j = i; !seen[j]; j = rho[j]) seen[j] = true;
    }
    int sign = ((rho.size() - cycles) % 2 == 0) ? 1 : -1;
    return Monomial{sign, exp_sum};
}

Monomial Gl2Brute::det_cuspidal(std::uint64_t theta, const Mat2& g) const {
    // Ind_ZN(theta psi) = pi_theta + Ind_E(theta) as honest representations,
    // so det pi_theta is the ratio of the two induced determinants.
    Monomial big = det_induced(SubChar{Subgroup::zn, theta, 0}, g);
    Monomial small = det_induced(SubChar{Subgroup::nonsplit_torus, theta, 0}, g);
    const std::uint64_t M = ring_.order();
    return Monomial{big.sign * small.sign, (big.zeta_exp + M - small.zeta_exp) % M};
}

bool Gl2Brute::cuspidal_det_trivial(std::uint64_t theta) const {
    // A linear character of GL_2 factors through det mod squares once its
    // restriction to the center and to SL_2 is trivial; value at t_x decides.
    Mat2 tx{Fq_.least_nonsquare(), 0, 0, 1};
    Monomial m = det_cuspidal(theta, tx);
    return m.sign == 1 && m.zeta_exp == 0;
}

const std::vector<Gl2Brute::Irreducible>& Gl2Brute::irreducibles() const {
    if (!irreducibles_.empty()) return irreducibles_;
    std::uint64_t N = q_ - 1, N2 = std::uint64_t(q_) * q_ - 1;
    const std::uint64_t M = ring_.order();
    std::vector<Irreducible> out;
    // one-dimensional: psi o det
    for (std::uint64_t j = 0; j < N; ++j) {
        ClassFunction chi(classes_.size(), CycInt(ring_));
        for (std::size_t c = 0; c < classes_.size(); ++c) {
            const Mat2& r = classes_[c].rep;
            unsigned det = Fq_.sub(Fq_.mul(r.a, r.d), Fq_.mul(r.b, r.c));
            chi[c] = CycInt::zeta_power(ring_, j * Fq_.dlog(det) % M * (M / N) % M);
        }
        out.push_back({gl2::OneDim{j}, std::move(chi)});
    }
    // principal series, unordered pairs j1 < j2
    for (std::uint64_t j1 = 0; j1 < N; ++j1)
        for (std::uint64_t j2 = j1 + 1; j2 < N; ++j2)
            out.push_back({gl2::PrincipalSeries{j1, j2},
                           induced_character(SubChar{Subgroup::borel, j1, j2})});
    // Steinberg twists: Ind_B(psi ox psi) - psi o det
    for (std::uint64_t j = 0; j < N; ++j) {
        ClassFunction ind = induced_character(SubChar{Subgroup::borel, j, j});
        const ClassFunction& onedim = out[j].chi;
        ClassFunction chi(classes_.size(), CycInt(ring_));
        for (std::size_t c = 0; c < classes_.size(); ++c) chi[c] = ind[c] - onedim[c];
        out.push_back({gl2::SteinbergTwist{j}, std::move(chi)});
    }
    // cuspidal: regular theta modulo theta ~ theta^q
    for (std::uint64_t j = 0; j < N2; ++j) {
        std::uint64_t jq = j * q_ % N2;
        if (jq == j || jq < j) continue;
        out.push_back({gl2::Cuspidal{j}, cuspidal_character(j)});
    }
    GLNQ_INTERNAL(out.size() == N2, "irreducible count must be q^2 - 1");
    irreducibles_ = std::move(out);
    return irreducibles_;
}

} // namespace glnq::oracle
