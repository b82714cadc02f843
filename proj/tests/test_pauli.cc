// Copyright 2026 The stabent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"
#include "helpers.h"
#include "stabent/errors.h"
#include "stabent/oracle.h"
#include "stabent/pauli.h"

using namespace stabent;

namespace {

PauliOperator P(std::string_view s) {
    return PauliOperator::from_string(s);
}

PauliOperator random_pauli(size_t n, Rng &rng) {
    PauliOperator p(n);
    for (size_t q = 0; q < n; q++) {
        uint64_t r = rng();
        p.set_xz(q, r & 1, r & 2);
    }
    p.set_phase_exponent(rng() & 3);
    return p;
}

}  // namespace

TEST_CASE("symplectic product examples") {
    CHECK(symplectic_product(P("X"), P("Z")));
    CHECK_FALSE(symplectic_product(P("XYZ"), P("XYZ")));
    CHECK(symplectic_product(P("XX"), P("ZI")));
    CHECK_THROWS(symplectic_product(P("X"), P("XX")));
}

TEST_CASE("multiplication examples") {
    PauliOperator p = P("-XYZ");
    CHECK(P("III") * p == p);
    PauliOperator xz = P("X") * P("Z");
    CHECK(xz.x().get(0));
    CHECK(xz.z().get(0));
    CHECK(xz.str() == "-iY");
    CHECK((P("Z") * P("X")).str() == "+iY");
    for (std::string_view s : {"X", "Y", "Z", "XY", "-YZX", "+iZ"}) {
        PauliOperator sq = P(s) * P(s);
        CHECK(sq.is_identity());
        CHECK((sq.phase_exponent() == 0 || sq.phase_exponent() == 2));
    }
    CHECK_THROWS(P("X") * P("XX"));
}

TEST_CASE("text round trip and signs") {
    for (std::string_view s : {"+XYZ", "-IIX", "+iZ", "-iY", "+I"}) {
        CHECK(P(s).str() == s);
    }
    CHECK(P("XYZ").str() == "+XYZ");
    CHECK(P("−ZZ").is_negative());
    CHECK(P("X_Z") == P("XIZ"));
    CHECK(P("Y").is_hermitian());
    CHECK_FALSE(P("iX").is_hermitian());
    CHECK_THROWS_AS(P("XQ"), ParseError);
    try {
        P("XXQ");
    } catch (const ParseError &e) {
        CHECK(e.column() == 3);
    }
}

TEST_CASE("restrict and is_identity_on") {
    std::vector<size_t> q0 = {0};
    std::vector<size_t> all = {0, 1, 2};
    CHECK(restrict(P("XZ"), q0) == P("X"));
    PauliOperator p = P("-XYZ");
    CHECK(restrict(p, all).symplectic() == p.symplectic());
    CHECK(restrict(P("III"), q0).is_identity());
    CHECK(is_identity_on(P("IZZ"), q0));
    CHECK_FALSE(is_identity_on(P("XXX"), q0));
    CHECK(is_identity_on(P("III"), all));
    std::vector<size_t> bad = {5};
    CHECK_THROWS(restrict(P("XX"), bad));
    CHECK_THROWS(is_identity_on(P("XX"), bad));
}

TEST_CASE("symplectic form is bilinear and alternating") {
    for (size_t t = 0; t < 500; t++) {
        Rng rng = stream_rng(21, t);
        size_t n = 1 + rng() % 90;
        PauliOperator p = random_pauli(n, rng), q = random_pauli(n, rng), r = random_pauli(n, rng);
        CHECK_FALSE(symplectic_product(p, p));
        CHECK(symplectic_product(p, q * r) == (symplectic_product(p, q) != symplectic_product(p, r)));
        CHECK(symplectic_product(p, q) == symplectic_product(q, p));
        CHECK(symplectic_product(p, q) == p.symplectic().dot(symplectic_dual(q.symplectic())));
        CHECK((p * q) * r == p * (q * r));
    }
}

TEST_CASE("multiplication and commutation match dense matrices") {
    for (size_t t = 0; t < 300; t++) {
        Rng rng = stream_rng(22, t);
        size_t n = 1 + t % 3;
        PauliOperator p = random_pauli(n, rng), q = random_pauli(n, rng);
        oracle::DensityMatrix mp = oracle::pauli_matrix(p), mq = oracle::pauli_matrix(q);
        CHECK((oracle::pauli_matrix(p * q) - mp * mq).norm() < 1e-12);
        bool commute = (mp * mq - mq * mp).norm() < 1e-12;
        CHECK(commute == !symplectic_product(p, q));
        CHECK(p.is_hermitian() == ((mp - mp.adjoint()).norm() < 1e-12));
    }
}

TEST_CASE("tensor and single") {
    CHECK(tensor(P("X"), P("-Z")) == P("-XZ"));
    CHECK(PauliOperator::single(3, 1, 'Y') == P("IYI"));
    CHECK(PauliOperator::from_symplectic(P("XY").symplectic(), true) == P("-XY"));
}
