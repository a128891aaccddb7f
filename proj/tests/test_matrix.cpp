#include <doctest.h>

#include <random>

#include "orbicurve/matrix.hpp"

using namespace orbicurve;

TEST_CASE("kernel of simple matrices") {
    Matrix<Rat> id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = Rat(1);
    CHECK(id.kernel_basis().empty());
    CHECK(id.rank() == 3);

    Matrix<Rat> z(2, 4);
    CHECK(z.kernel_basis().size() == 4);
    CHECK(z.rank() == 0);

    Matrix<Rat> m(2, 2);
    m.at(0, 0) = Rat(1);
    m.at(0, 1) = Rat(1);
    m.at(1, 0) = Rat(2);
    m.at(1, 1) = Rat(2);
    auto k = m.kernel_basis();
    REQUIRE(k.size() == 1);
    // proportional to (1, -1)
    CHECK(k[0][0] * Rat(-1) == k[0][1]);
    CHECK(!k[0][0].is_zero());
}

TEST_CASE("rank-nullity and exact kernel on random matrices") {
    std::mt19937_64 gen(3);
    for (int t = 0; t < 60; ++t) {
        int rows = 1 + int(gen() % 6), cols = 1 + int(gen() % 6);
        Matrix<Rat> m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                m.at(r, c) = Rat(long(gen() % 7) - 3, long(gen() % 3) + 1);
        auto basis = m.kernel_basis();
        CHECK(m.rank() + int(basis.size()) == cols);
        for (const auto& v : basis)
            for (const auto& y : m.mul_vec(v)) CHECK(y.is_zero());
    }
}

TEST_CASE("kernel output is deterministic") {
    std::mt19937_64 gen(5);
    Matrix<Rat> m(3, 5);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 5; ++c) m.at(r, c) = Rat(long(gen() % 9) - 4);
    auto k1 = m.kernel_basis();
    auto k2 = m.kernel_basis();
    CHECK(k1 == k2);
}

TEST_CASE("solve finds a particular solution or reports inconsistency") {
    Matrix<Rat> m(2, 3);
    m.at(0, 0) = Rat(1);
    m.at(0, 1) = Rat(1);
    m.at(1, 2) = Rat(2);
    auto x = m.solve({Rat(3), Rat(4)});
    REQUIRE(x.has_value());
    auto y = m.mul_vec(*x);
    CHECK(y[0] == Rat(3));
    CHECK(y[1] == Rat(4));

    Matrix<Rat> bad(2, 1);
    bad.at(0, 0) = Rat(1);
    bad.at(1, 0) = Rat(1);
    CHECK(!bad.solve({Rat(0), Rat(1)}).has_value());
}
