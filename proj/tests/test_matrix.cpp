#include <doctest.h>

#include <random>

#include "codent/catalog.hpp"
#include "codent/matrix.hpp"

using namespace codent;

namespace {

CMatrix rnd_matrix(std::mt19937_64& rng, size_t n, bool allow_singular = true) {
    std::uniform_int_distribution<long> small(-3, 3);
    while (true) {
        CMatrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                m.at(i, j) = Cyclo8(small(rng), small(rng), small(rng), small(rng));
        if (allow_singular || !m.det().is_zero()) return m;
    }
}

// test-side polynomial product oracle on coefficient vectors
TPoly poly_product(std::vector<TPoly> factors) {
    TPoly acc = TPoly::one();
    for (const auto& f : factors) acc = acc * f;
    return acc;
}

} // namespace

TEST_CASE("products") {
    CMatrix xi1 = catalog::ref_xi_u1();
    CHECK(CMatrix::identity(6) * catalog::ref_phi_chi() == catalog::ref_phi_chi());
    CHECK(xi1 * xi1 == CMatrix::identity(8)); // u1 squares to the identity mod (2,4)
    CMatrix zeta = catalog::ref_zeta8();
    CMatrix acc = CMatrix::identity(8);
    for (int i = 0; i < 8; ++i) acc = acc * zeta;
    CHECK(acc == CMatrix::identity(8));
    CHECK_THROWS_AS(CMatrix(2, 3) * CMatrix(2, 3), ShapeError);
}

TEST_CASE("determinants") {
    CHECK(CMatrix::identity(6).det() == Cyclo8(1));
    CMatrix u2(2, 2);
    u2.at(0, 0) = Cyclo8(-1);
    u2.at(0, 1) = Cyclo8(-1);
    u2.at(1, 0) = Cyclo8(-2);
    u2.at(1, 1) = Cyclo8(-1);
    CHECK(u2.det() == Cyclo8(-1));
    CMatrix d(3, 3);
    d.at(0, 0) = Cyclo8::zeta();
    d.at(1, 1) = Cyclo8::root_of_unity(2);
    d.at(2, 2) = Cyclo8(-1);
    CHECK(d.det() == -Cyclo8::zeta().pow(3));
    CHECK_THROWS_AS(CMatrix(2, 3).det(), ShapeError);
}

TEST_CASE("det is multiplicative") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 40; ++i) {
        CMatrix a = rnd_matrix(rng, 3), b = rnd_matrix(rng, 3);
        CHECK((a * b).det() == a.det() * b.det());
    }
}

TEST_CASE("char_det examples against expansion oracles") {
    // I2 -> (1-t)^2
    TPoly lin({Cyclo8(1), Cyclo8(-1)});
    CHECK(CMatrix::identity(2).char_det() == poly_product({lin, lin}));
    CHECK(CMatrix::identity(2).char_det() == TPoly({Cyclo8(1), Cyclo8(-2), Cyclo8(1)}));

    // z*I6 -> (1 - z t)^6
    CMatrix zi6(6, 6);
    for (size_t i = 0; i < 6; ++i) zi6.at(i, i) = Cyclo8::zeta();
    TPoly zlin({Cyclo8(1), -Cyclo8::zeta()});
    CHECK(zi6.char_det() == poly_product({zlin, zlin, zlin, zlin, zlin, zlin}));

    // the printed permutation has 4 fixed points and 2 transpositions:
    // (1-t)^4 (1-t^2)^2
    TPoly quad({Cyclo8(1), Cyclo8(0), Cyclo8(-1)});
    CHECK(catalog::ref_xi_u1().char_det() == poly_product({lin, lin, lin, lin, quad, quad}));
}

TEST_CASE("char_det is invariant under permutation conjugation") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        CMatrix m = rnd_matrix(rng, 4);
        std::vector<size_t> perm = {0, 1, 2, 3};
        std::shuffle(perm.begin(), perm.end(), rng);
        CMatrix p(4, 4);
        for (size_t i = 0; i < 4; ++i) p.at(i, perm[i]) = Cyclo8(1);
        CHECK((p * m * p.transpose()).char_det() == m.char_det());
    }
}

TEST_CASE("nullspace and rank") {
    CHECK(CMatrix(2, 2).nullspace().size() == 2);
    CHECK(CMatrix::identity(3).nullspace().empty());
    CMatrix coeff(2, 2);
    coeff.at(0, 0) = Cyclo8(1);
    coeff.at(0, 1) = Cyclo8(32);
    coeff.at(1, 0) = Cyclo8(1);
    coeff.at(1, 1) = Cyclo8(128);
    CHECK(coeff.nullspace().empty());
    CHECK(coeff.rank() == 2);

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        CMatrix m = rnd_matrix(rng, 4);
        auto basis = m.nullspace();
        CHECK(m.rank() + basis.size() == m.cols());
        // every basis vector really lies in the kernel
        for (const auto& v : basis) {
            for (size_t i = 0; i < m.rows(); ++i) {
                Cyclo8 acc;
                for (size_t j = 0; j < m.cols(); ++j) acc += m.at(i, j) * v[j];
                CHECK(acc.is_zero());
            }
        }
    }
}

TEST_CASE("inverse") {
    std::mt19937_64 rng(37);
    CMatrix m = rnd_matrix(rng, 3, false);
    CHECK(m * m.inverse() == CMatrix::identity(3));
    CHECK_THROWS_AS(CMatrix(2, 2).inverse(), DomainError);
}

TEST_CASE("canonical keys") {
    CMatrix i6 = CMatrix::identity(6);
    CHECK(i6.canonical_key() == CMatrix::identity(6).canonical_key());
    CHECK(i6.canonical_key() != i6.scaled(Cyclo8(-1)).canonical_key());
    CHECK(CMatrix::identity(2).canonical_key() != CMatrix::identity(3).canonical_key());
    std::mt19937_64 rng(41);
    CMatrix m = rnd_matrix(rng, 3);
    CHECK(m.canonical_key() == m.canonical_key());
    CHECK(m.canonical_key() != rnd_matrix(rng, 3).canonical_key());
}

TEST_CASE("unitarity of structured matrices") {
    CHECK(catalog::ref_xi_u1().is_unitary());
    CHECK(catalog::ref_eta_s1().is_unitary());
    CHECK(catalog::ref_chi().is_unitary());
    CHECK_FALSE(CMatrix::identity(2).scaled(Cyclo8(2)).is_unitary());
}
