#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "shutterbox/linalg.hpp"
#include "testutil.hpp"

using namespace shutterbox;
using testutil::Rand;

namespace {

const double r2 = 1.0 / std::sqrt(2.0);
const double r3 = 1.0 / std::sqrt(3.0);
const double r6 = 1.0 / std::sqrt(6.0);

SpaceShape shutter_space() { return SpaceShape("shutter", {"a", "b", "c"}); }
SpaceShape photon_space() { return SpaceShape("photon", {"a'", "b'"}); }

// The three-box states: uniform pre-selection, the two explicit
// post-selection basis vectors, and the post-state they pin down.
StateVector psi1() { return StateVector(shutter_space(), {Cx(r3, 0), Cx(r3, 0), Cx(r3, 0)}, true); }
StateVector psi2_prime() {
    return StateVector(shutter_space(), {Cx(r6, 0), Cx(r6, 0), Cx(2 * r6, 0)}, true);
}
StateVector psi2_double_prime() {
    return StateVector(shutter_space(), {Cx(r2, 0), Cx(-r2, 0), Cx(0, 0)}, true);
}
StateVector psi2() { return orthogonal_complement({psi2_prime(), psi2_double_prime()}).at(0); }

}  // namespace

TEST_CASE("tensor products over labeled spaces") {
    const StateVector photon_a = StateVector::basis_state(photon_space(), "a'");
    const StateVector post = psi2();

    SUBCASE("photon basis vector times a shutter state fills one block") {
        const StateVector product = tensor(photon_a, post);
        REQUIRE(product.dimension() == 6);
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(std::abs(product.amplitude(i) - post.amplitude(i)) < 1e-15);
        for (std::size_t i = 3; i < 6; ++i) CHECK(std::abs(product.amplitude(i)) == 0.0);
        CHECK(product.shape().subsystem(0).name == "photon");
        CHECK(product.shape().subsystem(1).name == "shutter");
    }

    SUBCASE("uniform photon times uniform particle is the uniform joint state") {
        const StateVector photon(photon_space(), {Cx(r2, 0), Cx(r2, 0)}, true);
        const StateVector product = tensor(photon, psi1());
        for (std::size_t i = 0; i < 6; ++i)
            CHECK(std::abs(product.amplitude(i) - Cx(r6, 0)) < 1e-15);
    }

    SUBCASE("two basis vectors give a joint basis vector") {
        const StateVector product = tensor(photon_a, StateVector::basis_state(shutter_space(), "b"));
        for (std::size_t i = 0; i < 6; ++i)
            CHECK(std::abs(product.amplitude(i) - (i == 1 ? Cx(1, 0) : Cx(0, 0))) == 0.0);
    }

    SUBCASE("norm is multiplicative") {
        Rand rand(11);
        for (int i = 0; i < 100; ++i) {
            const StateVector u = rand.state(photon_space());
            const StateVector v = rand.state(shutter_space());
            CHECK(std::abs(norm(tensor(u, v)) - norm(u) * norm(v)) < 1e-12);
        }
    }

    SUBCASE("subsystem name collision is rejected") {
        CHECK_THROWS_AS(tensor(psi1(), psi2()), ShapeError);
    }
}

TEST_CASE("inner products") {
    SUBCASE("the two explicit post-selection basis vectors are orthogonal") {
        CHECK(std::abs(inner(psi2_prime(), psi2_double_prime())) < 1e-15);
    }

    SUBCASE("normalized state has unit self-overlap") {
        CHECK(std::abs(inner(psi1(), psi1()) - Cx(1, 0)) < 1e-15);
    }

    SUBCASE("post-pre overlap of the three-box pair is 1/3") {
        CHECK(std::abs(inner(psi2(), psi1()) - Cx(1.0 / 3.0, 0)) < 1e-12);
    }

    SUBCASE("shape mismatch is rejected") {
        CHECK_THROWS_AS(inner(psi1(), StateVector::basis_state(photon_space(), "a'")), ShapeError);
    }

    SUBCASE("conjugate-linear in the left slot, linear in the right") {
        Rand rand(12);
        for (int i = 0; i < 1000; ++i) {
            const StateVector u = rand.state(shutter_space());
            const StateVector v = rand.state(shutter_space());
            const Cx alpha = rand.amplitude();
            const Cx beta = rand.amplitude();
            const Cx lhs = inner(alpha * u, beta * v);
            const Cx rhs = std::conj(alpha) * beta * inner(u, v);
            CHECK(std::abs(lhs - rhs) < 1e-10);
            const Cx self = inner(u, u);
            CHECK(self.real() >= 0.0);
            CHECK(std::abs(self.imag()) < 1e-12);
        }
    }
}

TEST_CASE("norms and normalization") {
    SUBCASE("normalizing the transmitted sum turns 1/sqrt(6) into 1/2") {
        const SpaceShape joint = photon_space().tensor_with(shutter_space());
        // Transmitted components: a'b, a'c, b'a, b'c.
        StateVector raw(joint, {Cx(0, 0), Cx(r6, 0), Cx(r6, 0), Cx(r6, 0), Cx(0, 0), Cx(r6, 0)});
        const StateVector unit = normalize(raw);
        for (const std::size_t i : {1, 2, 3, 5})
            CHECK(std::abs(unit.amplitude(i) - Cx(0.5, 0)) < 1e-15);
        CHECK(unit.marked_normalized());
    }

    SUBCASE("normalize scales away a prefactor") {
        const StateVector two_a = 2.0 * StateVector::basis_state(shutter_space(), "a");
        const StateVector unit = normalize(two_a);
        CHECK(std::abs(unit.amplitude(0) - Cx(1, 0)) < 1e-15);
    }

    SUBCASE("the post-selection-basis coefficient vector is unit norm") {
        const double s6 = std::sqrt(6.0) / 4.0;
        const double s2 = std::sqrt(2.0) / 4.0;
        const SpaceShape joint = photon_space().tensor_with(shutter_space());
        const StateVector v(joint,
                            {Cx(0, 0), Cx(0, 0), Cx(s6, 0), Cx(s6, 0), Cx(-s2, 0), Cx(s2, 0)});
        CHECK(std::abs(norm(v) - 1.0) < 1e-15);
    }

    SUBCASE("zero vector cannot be normalized") {
        CHECK_THROWS_AS(normalize(StateVector::zero(shutter_space())), DegenerateError);
    }
}

TEST_CASE("orthogonal complement") {
    SUBCASE("complement of the explicit post-selection pair is the three-box post-state") {
        const auto complement = orthogonal_complement({psi2_prime(), psi2_double_prime()});
        REQUIRE(complement.size() == 1);
        // Solving the two orthogonality equations by hand: equal weights on
        // the first two labels, opposite on the third.
        const StateVector expected(shutter_space(), {Cx(r3, 0), Cx(r3, 0), Cx(-r3, 0)}, true);
        CHECK(testutil::max_entry_diff(complement[0].amplitudes(), expected.amplitudes()) < 1e-12);
    }

    SUBCASE("complement of two basis vectors is the third") {
        const auto complement = orthogonal_complement(
            {StateVector::basis_state(shutter_space(), "a"),
             StateVector::basis_state(shutter_space(), "b")});
        REQUIRE(complement.size() == 1);
        CHECK(std::abs(complement[0].amplitude(2) - Cx(1, 0)) < 1e-15);
    }

    SUBCASE("complement of a full basis is empty") {
        const auto complement = orthogonal_complement(
            {StateVector::basis_state(shutter_space(), "a"),
             StateVector::basis_state(shutter_space(), "b"),
             StateVector::basis_state(shutter_space(), "c")});
        CHECK(complement.empty());
    }

    SUBCASE("dependent input set is rejected") {
        const StateVector v = psi1();
        CHECK_THROWS_AS(orthogonal_complement({v, 2.0 * v}), ValidationError);
    }

    SUBCASE("complement plus orthonormalized input spans the whole space") {
        Rand rand(13);
        for (int i = 0; i < 1000; ++i) {
            const std::size_t d = 2 + i % 7;
            const SpaceShape space = testutil::labeled_space("system", d);
            const std::size_t count = 1 + i % d;
            std::vector<StateVector> input;
            for (std::size_t k = 0; k < count; ++k) input.push_back(rand.state(space));

            std::vector<StateVector> all;
            try {
                all = orthonormalize(input);
            } catch (const ValidationError&) {
                continue;  // dependent random draw
            }
            for (auto& v : orthogonal_complement(input)) all.push_back(std::move(v));
            REQUIRE(all.size() == d);
            for (std::size_t p = 0; p < d; ++p)
                for (std::size_t q = 0; q <= p; ++q) {
                    const double expected = p == q ? 1.0 : 0.0;
                    CHECK(std::abs(inner(all[p], all[q]) - Cx(expected, 0)) < 1e-10);
                }
        }
    }

    SUBCASE("first nonzero coefficient of each complement vector is real positive") {
        Rand rand(14);
        for (int i = 0; i < 200; ++i) {
            const SpaceShape space = testutil::labeled_space("system", 4);
            for (const auto& v : orthogonal_complement({rand.state(space)})) {
                for (std::size_t k = 0; k < v.dimension(); ++k) {
                    const Cx a = v.amplitude(k);
                    if (std::abs(a) <= eps_zero) continue;
                    CHECK(a.real() > 0.0);
                    CHECK(std::abs(a.imag()) < 1e-10 * a.real());
                    break;
                }
            }
        }
    }
}

TEST_CASE("change of basis") {
    const SpaceShape joint = photon_space().tensor_with(shutter_space());
    const StateVector transmitted(
        joint, {Cx(0, 0), Cx(0.5, 0), Cx(0.5, 0), Cx(0.5, 0), Cx(0, 0), Cx(0.5, 0)}, true);

    auto post_selection_basis = [&] {
        std::vector<StateVector> basis;
        for (const StateVector& v : {psi2(), psi2_prime(), psi2_double_prime()})
            for (const char* mode : {"a'", "b'"})
                basis.push_back(tensor(StateVector::basis_state(photon_space(), mode), v));
        return basis;
    };

    SUBCASE("transmitted state in the post-selection basis") {
        const auto coefficients = change_basis(transmitted, post_selection_basis());
        const double s6 = std::sqrt(6.0) / 4.0;
        const double s2 = std::sqrt(2.0) / 4.0;
        const std::vector<Cx> expected{Cx(0, 0), Cx(0, 0), Cx(s6, 0),
                                       Cx(s6, 0), Cx(-s2, 0), Cx(s2, 0)};
        CHECK(testutil::max_entry_diff(coefficients, expected) < 1e-10);
    }

    SUBCASE("reconstruction from coefficients returns the state") {
        const auto basis = post_selection_basis();
        const auto coefficients = change_basis(transmitted, basis);
        StateVector rebuilt = StateVector::zero(joint);
        for (std::size_t k = 0; k < basis.size(); ++k)
            rebuilt = rebuilt + coefficients[k] * basis[k];
        CHECK(norm(rebuilt - transmitted) < 1e-10);
    }

    SUBCASE("a basis vector has one-hot coefficients") {
        const auto basis = post_selection_basis();
        const auto coefficients = change_basis(basis[3], basis);
        for (std::size_t k = 0; k < coefficients.size(); ++k)
            CHECK(std::abs(coefficients[k] - (k == 3 ? Cx(1, 0) : Cx(0, 0))) < 1e-12);
    }

    SUBCASE("pre-state in the shutter post-selection basis") {
        const auto coefficients =
            change_basis(psi1(), {psi2(), psi2_prime(), psi2_double_prime()});
        // By hand: overlaps 1/3, 4/sqrt(18) and 0.
        CHECK(std::abs(coefficients[0] - Cx(1.0 / 3.0, 0)) < 1e-12);
        CHECK(std::abs(coefficients[1] - Cx(4.0 / std::sqrt(18.0), 0)) < 1e-12);
        CHECK(std::abs(coefficients[2]) < 1e-12);
    }

    SUBCASE("non-orthonormal basis is rejected") {
        CHECK_THROWS_AS(change_basis(psi1(), {psi1(), psi2_prime(), psi2_prime()}),
                        ValidationError);
    }

    SUBCASE("incomplete basis is rejected") {
        CHECK_THROWS_AS(change_basis(psi1(), {psi2(), psi2_prime()}), ValidationError);
    }

    SUBCASE("coefficient magnitudes preserve the squared norm") {
        Rand rand(15);
        for (int i = 0; i < 1000; ++i) {
            const std::size_t d = 2 + i % 7;
            const SpaceShape space = testutil::labeled_space("system", d);
            const StateVector u = rand.state(space);
            std::vector<StateVector> basis{rand.unit_state(space)};
            for (auto& v : orthogonal_complement({basis.front()})) basis.push_back(std::move(v));
            double sum = 0.0;
            for (const Cx& c : change_basis(u, basis)) sum += std::norm(c);
            CHECK(std::abs(sum - norm(u) * norm(u)) < 1e-10);
        }
    }
}

TEST_CASE("projectors") {
    SUBCASE("projector onto one basis vector") {
        const Operator p = projector({StateVector::basis_state(shutter_space(), "a")});
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(std::abs(p.entry(i, j) - (i == 0 && j == 0 ? Cx(1, 0) : Cx(0, 0))) <
                      1e-15);
    }

    SUBCASE("post-selection subspace annihilates the transmitted state") {
        const StateVector post = psi2();
        std::vector<StateVector> span;
        for (const char* mode : {"a'", "b'"})
            span.push_back(tensor(StateVector::basis_state(photon_space(), mode), post));
        const Operator p = projector(span);

        const SpaceShape joint = photon_space().tensor_with(shutter_space());
        const StateVector transmitted(
            joint, {Cx(0, 0), Cx(0.5, 0), Cx(0.5, 0), Cx(0.5, 0), Cx(0, 0), Cx(0.5, 0)}, true);
        CHECK(norm(apply(p, transmitted)) < 1e-12);
    }

    SUBCASE("projector of a full basis is the identity") {
        const Operator p = projector({StateVector::basis_state(shutter_space(), "a"),
                                      StateVector::basis_state(shutter_space(), "b"),
                                      StateVector::basis_state(shutter_space(), "c")});
        const Operator defect = p - Operator::identity(shutter_space());
        for (const Cx& e : defect.entries()) CHECK(std::abs(e) < 1e-15);
    }

    SUBCASE("zero vector in the span is rejected") {
        CHECK_THROWS_AS(projector({StateVector::zero(shutter_space())}), ValidationError);
    }

    SUBCASE("projectors are idempotent and Hermitian, trace equals rank") {
        Rand rand(16);
        for (int i = 0; i < 1000; ++i) {
            const std::size_t d = 2 + i % 5;
            const SpaceShape space = testutil::labeled_space("system", d);
            const std::size_t rank = 1 + i % (d - 1);
            std::vector<StateVector> span;
            for (std::size_t k = 0; k < rank; ++k) span.push_back(rand.state(space));
            Operator p = Operator::zero(space);
            try {
                p = projector(span);
            } catch (const ValidationError&) {
                continue;
            }
            CHECK(hermiticity_defect(p) < eps_herm);
            const Operator defect = p * p - p;
            for (const Cx& e : defect.entries()) CHECK(std::abs(e) < eps_herm);
            CHECK(std::abs(trace_of(p) - Cx(static_cast<double>(rank), 0)) < 1e-10);
        }
    }
}

TEST_CASE("partial trace") {
    const SpaceShape joint = photon_space().tensor_with(shutter_space());

    SUBCASE("reflected branch reduces to an even mixture of the blocked labels") {
        // Normalized reflected branch (1/sqrt2)(|a'a⟩ + |b'b⟩).
        StateVector reflected = StateVector::zero(joint);
        std::vector<Cx> amps(6);
        amps[0] = Cx(r2, 0);  // a'a
        amps[4] = Cx(r2, 0);  // b'b
        reflected = StateVector(joint, amps, true);

        const DensityOperator reduced =
            partial_trace(DensityOperator::from_pure(reflected), "shutter");
        REQUIRE(reduced.dimension() == 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                const Cx expected = (i == j && i < 2) ? Cx(0.5, 0) : Cx(0, 0);
                CHECK(std::abs(reduced.entry(i, j) - expected) < 1e-12);
            }
    }

    SUBCASE("product state reduces to the kept factor") {
        Rand rand(17);
        const StateVector photon = rand.unit_state(photon_space());
        const StateVector particle = rand.unit_state(shutter_space());
        const StateVector product = normalize(tensor(photon, particle));

        const DensityOperator reduced =
            partial_trace(DensityOperator::from_pure(product), "photon");
        const DensityOperator expected = DensityOperator::from_pure(photon);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                CHECK(std::abs(reduced.entry(i, j) - expected.entry(i, j)) < 1e-12);
    }

    SUBCASE("maximally entangled pair reduces to the maximally mixed state") {
        const SpaceShape pair =
            SpaceShape("left", {"0", "1"}).tensor_with(SpaceShape("right", {"0", "1"}));
        StateVector bell(pair, {Cx(r2, 0), Cx(0, 0), Cx(0, 0), Cx(r2, 0)}, true);
        const DensityOperator reduced = partial_trace(DensityOperator::from_pure(bell), "right");
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                CHECK(std::abs(reduced.entry(i, j) - (i == j ? Cx(0.5, 0) : Cx(0, 0))) < 1e-12);
    }

    SUBCASE("unknown subsystem name is rejected") {
        Rand rand(18);
        const DensityOperator rho = DensityOperator::from_pure(rand.unit_state(joint));
        CHECK_THROWS_AS(partial_trace(rho, "detector"), ShapeError);
    }

    SUBCASE("keeping the middle subsystem of a three-part product state") {
        Rand rand(22);
        const SpaceShape left = testutil::labeled_space("left", 2, "l");
        const SpaceShape mid = testutil::labeled_space("mid", 3, "m");
        const SpaceShape right = testutil::labeled_space("right", 2, "r");
        const StateVector a = rand.unit_state(left);
        const StateVector b = rand.unit_state(mid);
        const StateVector c = rand.unit_state(right);
        const StateVector product = normalize(tensor(tensor(a, b), c));

        const DensityOperator reduced =
            partial_trace(DensityOperator::from_pure(product), "mid");
        const DensityOperator expected = DensityOperator::from_pure(b);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(std::abs(reduced.entry(i, j) - expected.entry(i, j)) < 1e-12);
    }

    SUBCASE("trace and positivity are preserved on random pure bipartite states") {
        Rand rand(19);
        for (int i = 0; i < 1000; ++i) {
            const std::size_t d1 = 2 + i % 3;
            const std::size_t d2 = 2 + (i / 3) % 3;
            const SpaceShape pair = testutil::labeled_space("left", d1, "l")
                                        .tensor_with(testutil::labeled_space("right", d2, "r"));
            const DensityOperator rho = DensityOperator::from_pure(rand.unit_state(pair));
            const DensityOperator reduced = partial_trace(rho, i % 2 == 0 ? "left" : "right");
            CHECK(std::abs(trace_of(reduced.as_operator()) - Cx(1, 0)) < eps_norm);
            const auto eigenvalues = hermitian_eigenvalues(reduced.as_operator());
            CHECK(eigenvalues.front() >= -eps_psd);
        }
    }
}

TEST_CASE("hermitian eigenvalues") {
    SUBCASE("diagonal matrix") {
        const SpaceShape space = testutil::labeled_space("system", 3);
        Operator a = Operator::zero(space);
        a.entry(0, 0) = Cx(2, 0);
        a.entry(1, 1) = Cx(-1, 0);
        a.entry(2, 2) = Cx(0.5, 0);
        const auto eigenvalues = hermitian_eigenvalues(a);
        CHECK(std::abs(eigenvalues[0] + 1.0) < 1e-14);
        CHECK(std::abs(eigenvalues[1] - 0.5) < 1e-14);
        CHECK(std::abs(eigenvalues[2] - 2.0) < 1e-14);
    }

    SUBCASE("complex off-diagonal 2x2") {
        const SpaceShape space = testutil::labeled_space("system", 2);
        Operator a = Operator::zero(space);
        a.entry(0, 0) = Cx(1, 0);
        a.entry(1, 1) = Cx(1, 0);
        a.entry(0, 1) = Cx(0, 1);
        a.entry(1, 0) = Cx(0, -1);
        const auto eigenvalues = hermitian_eigenvalues(a);
        CHECK(std::abs(eigenvalues[0] - 0.0) < 1e-12);
        CHECK(std::abs(eigenvalues[1] - 2.0) < 1e-12);
    }

    SUBCASE("eigenvalue sums match trace and Frobenius norm on random Hermitian matrices") {
        Rand rand(20);
        for (int i = 0; i < 200; ++i) {
            const std::size_t d = 2 + i % 5;
            const SpaceShape space = testutil::labeled_space("system", d);
            Operator a = Operator::zero(space);
            for (std::size_t p = 0; p < d; ++p) {
                a.entry(p, p) = Cx(rand.gauss(), 0);
                for (std::size_t q = p + 1; q < d; ++q) {
                    const Cx z = rand.amplitude();
                    a.entry(p, q) = z;
                    a.entry(q, p) = std::conj(z);
                }
            }
            const auto eigenvalues = hermitian_eigenvalues(a);
            double sum = 0.0, sum_sq = 0.0;
            for (const double lambda : eigenvalues) {
                sum += lambda;
                sum_sq += lambda * lambda;
            }
            double frob_sq = 0.0;
            for (const Cx& e : a.entries()) frob_sq += std::norm(e);
            CHECK(std::abs(sum - trace_of(a).real()) < 1e-10);
            CHECK(std::abs(sum_sq - frob_sq) < 1e-9);
        }
    }

    SUBCASE("pure density eigenvalues are one and zeros") {
        Rand rand(21);
        const SpaceShape space = testutil::labeled_space("system", 4);
        const DensityOperator rho = DensityOperator::from_pure(rand.unit_state(space));
        const auto eigenvalues = hermitian_eigenvalues(rho.as_operator());
        CHECK(std::abs(eigenvalues.back() - 1.0) < 1e-12);
        for (std::size_t i = 0; i + 1 < eigenvalues.size(); ++i)
            CHECK(std::abs(eigenvalues[i]) < 1e-12);
    }

    SUBCASE("gram matrices come out nonnegative") {
        Rand rand(23);
        for (int i = 0; i < 200; ++i) {
            const std::size_t d = 2 + i % 5;
            const SpaceShape space = testutil::labeled_space("system", d);
            std::vector<StateVector> columns;
            for (std::size_t k = 0; k < d; ++k) columns.push_back(rand.state(space));
            Operator gram = Operator::zero(space);
            for (std::size_t p = 0; p < d; ++p)
                for (std::size_t q = 0; q < d; ++q)
                    gram.entry(p, q) = inner(columns[p], columns[q]);
            const auto eigenvalues = hermitian_eigenvalues(gram);
            CHECK(eigenvalues.front() > -1e-9);
        }
    }

    SUBCASE("non-Hermitian input is rejected") {
        const SpaceShape space = testutil::labeled_space("system", 2);
        Operator a = Operator::zero(space);
        a.entry(0, 1) = Cx(1, 0);
        CHECK_THROWS_AS(hermitian_eigenvalues(a), ValidationError);
    }
}

TEST_CASE("canonical phase") {
    const SpaceShape space = testutil::labeled_space("system", 3);
    const StateVector v(space, {Cx(0, 0), Cx(0, -0.6), Cx(0.8, 0)});
    const StateVector rotated = canonical_phase(v);
    CHECK(rotated.amplitude(1).real() > 0.0);
    CHECK(std::abs(rotated.amplitude(1).imag()) < 1e-15);
    CHECK(std::abs(norm(rotated) - norm(v)) < 1e-15);
    CHECK(std::abs(std::abs(inner(rotated, v)) - norm(v) * norm(v)) < 1e-12);
}

TEST_CASE("state vector invariants") {
    SUBCASE("amplitude count must match the shape") {
        CHECK_THROWS_AS(StateVector(shutter_space(), {Cx(1, 0)}), ShapeError);
    }

    SUBCASE("non-finite amplitudes are rejected") {
        CHECK_THROWS_AS(
            StateVector(shutter_space(), {Cx(std::nan(""), 0), Cx(0, 0), Cx(0, 0)}),
            ValidationError);
    }

    SUBCASE("the normalized mark is verified") {
        CHECK_THROWS_AS(StateVector(shutter_space(), {Cx(2, 0), Cx(0, 0), Cx(0, 0)}, true),
                        ValidationError);
    }

    SUBCASE("duplicate labels within a subsystem are rejected") {
        CHECK_THROWS_AS(SpaceShape("shutter", {"a", "a", "c"}), ShapeError);
    }
}
