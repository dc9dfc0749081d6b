#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "kpotent/error.hpp"
#include "kpotent/potency.hpp"
#include "support/generators.hpp"

using namespace kpotent;
using testsupport::random_element;
using testsupport::random_nonzero;
using testsupport::random_scalar;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kQ2 = FieldSpec::quadratic(2);

QuatAlgebra definite(const FieldSpec& f) { return QuatAlgebra(f.from_int(-1), f.from_int(-1)); }

std::array<FieldElement, 3> vec3(const FieldSpec& f, std::string_view text) {
    const auto v = parse_scalar_list(f, text);
    return {v.at(0), v.at(1), v.at(2)};
}

} // namespace

TEST(Classify, PrintedExamples) {
    const FieldSpec f5 = FieldSpec::prime(5);
    const PotencyReport r5 = classify(Quaternion::from_ints(definite(f5), {2, 3, 1, 3}), 16);
    EXPECT_EQ(r5.kind, PotencyKind::k_potent);
    EXPECT_EQ(r5.index, 5U);
    EXPECT_EQ(r5.trace, f5.from_int(4));
    EXPECT_EQ(r5.norm, f5.from_int(3));

    const FieldSpec f13 = FieldSpec::prime(13);
    const OctAlgebra o(f13.from_int(-1), f13.from_int(-1), f13.from_int(-1));
    const PotencyReport r13 = classify(Octonion::from_ints(o, {3, 2, 1, 1, 1, 1, 1, 1}), 16);
    EXPECT_EQ(r13.kind, PotencyKind::k_potent);
    EXPECT_EQ(r13.index, 13U);

    const QuatAlgebra split(kQ2.one(), kQ2.one());
    const PotencyReport rz = classify(parse_element(split, "0,1/2,1/2,1/2s"));
    EXPECT_EQ(rz.kind, PotencyKind::nilpotent);
    EXPECT_EQ(rz.index, 2U);
}

TEST(Classify, ZeroAndOneAreIdempotent) {
    const auto zero = classify(Quaternion::zero(definite(kQ)));
    EXPECT_EQ(zero.kind, PotencyKind::k_potent);
    EXPECT_EQ(zero.index, 2U);
    const auto one = classify(Quaternion::one(definite(kQ)));
    EXPECT_EQ(one.kind, PotencyKind::k_potent);
    EXPECT_EQ(one.index, 2U);
}

TEST(Classify, BoundAndPreconditions) {
    const Quaternion x = parse_element(definite(kQ), "2,0,0,0");
    const PotencyReport r = classify(x, 10);
    EXPECT_EQ(r.kind, PotencyKind::none);
    EXPECT_EQ(r.index, 10U);
    EXPECT_THROW(classify(x, 1), PreconditionError);

    // Without the norm shortcut (general parameters over Q) the bound still applies.
    const QuatAlgebra general(kQ.from_int(2), kQ.from_int(3));
    EXPECT_EQ(classify(parse_element(general, "2,0,0,0"), 7).index, 7U);

    // 13-potent but only 12 powers examined.
    const FieldSpec f13 = FieldSpec::prime(13);
    const OctAlgebra o(f13.from_int(-1), f13.from_int(-1), f13.from_int(-1));
    EXPECT_EQ(classify(Octonion::from_ints(o, {3, 2, 1, 1, 1, 1, 1, 1}), 12).kind, PotencyKind::none);
}

TEST(Classify, JsonShape) {
    const FieldSpec f5 = FieldSpec::prime(5);
    const auto j = to_json(classify(Quaternion::from_ints(definite(f5), {2, 3, 1, 3})));
    EXPECT_EQ(j, nlohmann::json::parse(R"({"kind":"k-potent","index":5,"trace":"4","norm":"3"})"));
    EXPECT_EQ(parse_potency_kind("nilpotent"), PotencyKind::nilpotent);
    EXPECT_THROW(parse_potency_kind("idempotent"), ParseError);
}

TEST(Classify, MatrixTransportOverZ5) {
    // Every k-potent or nilpotent of H(-1,-1) over Z_5 carries over to both matrices.
    const FieldSpec f5 = FieldSpec::prime(5);
    const QuatAlgebra h = definite(f5);
    for (int n = 0; n < 625; ++n) {
        const Quaternion x = Quaternion::from_ints(h, {n / 125, n / 25 % 5, n / 5 % 5, n % 5});
        const PotencyReport r = classify(x);
        ASSERT_NE(r.kind, PotencyKind::none);
        ASSERT_TRUE(representation_confirms(r, left_representation(x))) << x.to_string();
        ASSERT_TRUE(representation_confirms(r, right_representation(x))) << x.to_string();
        const MatrixPotency m = classify_matrix(left_representation(x));
        ASSERT_EQ(m.kind, r.kind);
        ASSERT_EQ(m.index, r.index);
        if (r.kind == PotencyKind::nilpotent) {
            ASSERT_EQ(r.index, 2U);
        }
    }
}

TEST(Classify, RandomNilpotentsHaveIndexTwo) {
    const FieldSpec f13 = FieldSpec::prime(13);
    const OctAlgebra o(f13.from_int(2), f13.from_int(3), f13.from_int(7));
    std::mt19937_64 rng(8);
    int nilpotents = 0;
    for (int i = 0; i < 3000; ++i) {
        const Octonion x = random_element(o, rng);
        const PotencyReport r = classify(x, 8);
        if (r.kind == PotencyKind::nilpotent) {
            ++nilpotents;
            ASSERT_EQ(r.index, 2U);
            ASSERT_TRUE(representation_confirms(r, left_representation(x)));
            ASSERT_TRUE(representation_confirms(r, right_representation(x)));
        }
    }
    EXPECT_GT(nilpotents, 0);
}

TEST(Rotor, PrintedExamples) {
    const auto x7 = rotor_generate(7, vec3(kQ, "1,1,1"), definite(kQ));
    EXPECT_EQ(x7.to_string(), "1/2,1/2,1/2,1/2");
    const auto x4 = rotor_generate(4, vec3(kQ, "1,-1,1"), definite(kQ));
    EXPECT_EQ(x4.to_string(), "-1/2,1/2,-1/2,1/2");
    const auto x5 = rotor_generate(5, vec3(kQ2, "1,-1,s"), definite(kQ2));
    EXPECT_EQ(x5.to_string(), "0,1/2,-1/2,1/2s");
    const auto x3 = rotor_generate(3, vec3(kQ, "2,-5,1/3"), definite(kQ));
    EXPECT_EQ(x3, Quaternion::scalar(definite(kQ), kQ.from_int(-1)));

    EXPECT_EQ(classify(x7).index, 7U);
    EXPECT_EQ(classify(x4).index, 4U);
    EXPECT_EQ(classify(x5).index, 5U);
    EXPECT_EQ(classify(x3).index, 3U);
    EXPECT_EQ(power(x7, 6), Quaternion::one(definite(kQ)));
    EXPECT_EQ(power(x5, 4), Quaternion::one(definite(kQ2)));
}

TEST(Rotor, Errors) {
    EXPECT_THROW(rotor_generate(6, vec3(kQ, "1,1,1"), definite(kQ)), PreconditionError);
    try {
        (void)rotor_generate(6, vec3(kQ, "1,1,1"), definite(kQ));
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("unsupported k"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("3, 4, 5, 7"), std::string::npos);
    }
    // (1,0,0) needs sqrt(3)/2 for k = 7.
    try {
        (void)rotor_generate(7, vec3(kQ, "1,0,0"), definite(kQ));
        FAIL();
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("not normalizable"), std::string::npos);
    }
    EXPECT_THROW(rotor_generate(5, vec3(kQ, "0,0,0"), definite(kQ)), PreconditionError);
    const FieldSpec f5 = FieldSpec::prime(5);
    EXPECT_THROW(rotor_generate(5, vec3(f5, "1,0,0"), definite(f5)), PreconditionError);
    EXPECT_THROW(rotor_generate(5, vec3(kQ, "1,0,0"), QuatAlgebra(kQ.one(), kQ.one())), PreconditionError);
}

// Directions whose scale is exact: squared length 3 t^2 for k = 4 and 7,
// a square for k = 5, anything nonzero for k = 3. Each base pattern gets
// random signs, a random order and a random rational factor.
TEST(Rotor, RoundTripTwentyDirectionsPerOrder) {
    const std::vector<std::array<int, 3>> thirds{{1, 1, 1}, {1, 1, 5}, {1, 5, 7}};
    const std::vector<std::array<int, 3>> squares{{1, 2, 2}, {2, 3, 6}, {1, 4, 8}, {0, 3, 4}};
    std::mt19937_64 rng(21);
    for (const std::uint64_t k : supported_rotor_orders()) {
        for (const FieldSpec& field : {kQ, kQ2}) {
            const QuatAlgebra h = definite(field);
            for (int made = 0; made < 20; ++made) {
                std::array<FieldElement, 3> d;
                if (k == 3) {
                    do {
                        d = {random_scalar(field, rng), random_scalar(field, rng), random_scalar(field, rng)};
                    } while (d[0].is_zero() && d[1].is_zero() && d[2].is_zero());
                } else {
                    auto base = (k == 5 ? squares : thirds)[rng() % (k == 5 ? squares.size() : thirds.size())];
                    std::shuffle(base.begin(), base.end(), rng);
                    const FieldElement scale = field.from_rational(random_nonzero(kQ, rng).to_rational());
                    for (std::size_t i = 0; i < 3; ++i) {
                        d[i] = scale * field.from_int(rng() % 2 ? base[i] : -base[i]);
                    }
                }
                const Quaternion x = rotor_generate(k, d, h);
                const PotencyReport r = classify(x, k + 1);
                ASSERT_EQ(r.kind, PotencyKind::k_potent) << x.to_string();
                ASSERT_EQ(r.index, k) << x.to_string();
                ASSERT_TRUE(r.norm.is_one());
                ASSERT_EQ(power(x, k - 1), Quaternion::one(h));
            }
        }
    }
    // A direction that needs the radical.
    const Quaternion x = rotor_generate(5, vec3(kQ2, "1,1,s"), definite(kQ2));
    EXPECT_EQ(x.to_string(), "0,1/2,1/2,1/2s");
}

TEST(DeMoivre, PrintedExamples) {
    EXPECT_TRUE(demoivre_power_check(kQ.from_rational(Rational(1, 2)), vec3(kQ, "1/2,1/2,1/2"), 6));
    EXPECT_TRUE(demoivre_power_check(kQ2.zero(), vec3(kQ2, "1/2,-1/2,1/2s"), 4));
    EXPECT_TRUE(demoivre_power_check(kQ.from_int(7), vec3(kQ, "1,2,3"), 1));
    // Not a unit: theta^2 = -1 fails and the recursion no longer matches.
    EXPECT_FALSE(demoivre_power_check(kQ.from_rational(Rational(1, 2)), vec3(kQ, "1,1,1"), 3));
}

TEST(SplitGenerate, PrintedExamples) {
    const QuatAlgebra h11(kQ.one(), kQ.one());
    EXPECT_EQ(split_generate(SplitKind::idempotent, h11, vec3(kQ, "1,1,1")).to_string(), "1/2,1/2,1/2,1/2");
    EXPECT_EQ(split_generate(SplitKind::tripotent, h11, vec3(kQ, "1,1,1")).to_string(), "-1/2,1/2,1/2,1/2");
    const QuatAlgebra h11s(kQ2.one(), kQ2.one());
    EXPECT_EQ(split_generate(SplitKind::nilpotent, h11s, vec3(kQ2, "1/2,1/2,1/2s")).to_string(), "0,1/2,1/2,1/2s");

    const FieldSpec q6 = FieldSpec::quadratic(6);
    const QuatAlgebra h23(q6.from_int(2), q6.from_int(3));
    EXPECT_EQ(split_generate(SplitKind::idempotent, h23, vec3(q6, "1,1,1/3s")).to_string(), "1/2,1/2,1/2,1/6s");
    EXPECT_EQ(split_generate(SplitKind::tripotent, h23, vec3(q6, "1,1,1/3s")).to_string(), "-1/2,1/2,1/2,1/6s");
    const QuatAlgebra h23s(kQ2.from_int(2), kQ2.from_int(3));
    EXPECT_EQ(split_generate(SplitKind::idempotent, h23s, vec3(kQ2, "s,1,1")).to_string(), "1/2,1/2s,1/2,1/2");
    EXPECT_EQ(split_generate(SplitKind::tripotent, h23s, vec3(kQ2, "s,1,1")).to_string(), "-1/2,1/2s,1/2,1/2");
}

TEST(SplitGenerate, Errors) {
    const QuatAlgebra h11(kQ.one(), kQ.one());
    EXPECT_THROW(split_generate(SplitKind::nilpotent, h11, vec3(kQ, "1,1,1")), PreconditionError);
    EXPECT_THROW(split_generate(SplitKind::idempotent, h11, vec3(kQ, "0,0,0")), PreconditionError);
    // (1,0,1) has N(v) = 0 and cannot be scaled.
    EXPECT_THROW(split_generate(SplitKind::idempotent, h11, vec3(kQ, "1,0,1")), PreconditionError);
    // N(v) = -2: lambda^2 = 1/8 has no rational root.
    EXPECT_THROW(split_generate(SplitKind::idempotent, h11, vec3(kQ, "1,1,0")), PreconditionError);
    EXPECT_EQ(parse_split_kind("tripotent"), SplitKind::tripotent);
    EXPECT_THROW(parse_split_kind("rotor"), ParseError);
}

template <std::size_t Dim>
void split_round_trip(const Algebra<Dim>& alg, std::mt19937_64& rng, int wanted) {
    const FieldSpec& field = alg.field();
    int made[3] = {0, 0, 0};
    for (int attempt = 0; attempt < 20000 && (made[0] < wanted || made[1] < wanted || made[2] < wanted); ++attempt) {
        std::array<FieldElement, Dim - 1> v;
        for (auto& c : v) c = random_scalar(field, rng);
        for (const SplitKind kind : {SplitKind::idempotent, SplitKind::tripotent, SplitKind::nilpotent}) {
            Element<Dim> x = Element<Dim>::zero(alg);
            try {
                x = split_generate(kind, alg, std::span<const FieldElement, Dim - 1>(v));
            } catch (const PreconditionError&) {
                continue;
            }
            ++made[static_cast<int>(kind)];
            const PotencyReport r = classify(x);
            ASSERT_TRUE(norm(x).is_zero());
            switch (kind) {
            case SplitKind::idempotent:
                ASSERT_EQ(x * x, x);
                ASSERT_EQ(r.kind, PotencyKind::k_potent);
                ASSERT_EQ(r.index, 2U);
                ASSERT_TRUE(trace(x).is_one());
                break;
            case SplitKind::tripotent:
                ASSERT_EQ((x * x) * x, x);
                ASSERT_NE(x * x, x);
                ASSERT_EQ(r.kind, PotencyKind::k_potent);
                ASSERT_EQ(r.index, 3U);
                ASSERT_EQ(trace(x), field.from_int(-1));
                break;
            case SplitKind::nilpotent:
                ASSERT_TRUE((x * x).is_zero());
                ASSERT_EQ(r.kind, PotencyKind::nilpotent);
                ASSERT_EQ(r.index, 2U);
                break;
            }
            ASSERT_TRUE(representation_confirms(r, left_representation(x)));
            ASSERT_TRUE(representation_confirms(r, right_representation(x)));
        }
    }
    EXPECT_GE(made[0], wanted) << alg.to_string();
    EXPECT_GE(made[1], wanted) << alg.to_string();
}

TEST(SplitGenerate, RoundTripOverFiniteFields) {
    std::mt19937_64 rng(31);
    for (const std::uint64_t p : {5, 13}) {
        const FieldSpec f = FieldSpec::prime(p);
        split_round_trip(QuatAlgebra(f.from_int(-1), f.from_int(-1)), rng, 20);
        split_round_trip(QuatAlgebra(f.from_int(2), f.from_int(3)), rng, 20);
        split_round_trip(OctAlgebra(f.from_int(-1), f.from_int(-1), f.from_int(-1)), rng, 20);
    }
}

TEST(SplitGenerate, RoundTripOverQ) {
    std::mt19937_64 rng(32);
    split_round_trip(QuatAlgebra(kQ.one(), kQ.one()), rng, 5);
}
