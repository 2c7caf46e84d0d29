#include <doctest.h>

#include <bohrlab/verify.hpp>

#include <json.hpp>

using namespace bohrlab;

namespace {

CheckOptions quick() {
    CheckOptions o;
    o.samples = 24;
    o.r_points = 10;
    o.theta_samples = 64;
    return o;
}

}  // namespace

TEST_CASE("check_theorem: quick pass over a few representative ids") {
    for (const char* id : {"theoremA", "theoremB_sq", "lemma1", "remark2_ii", "theorem1_i",
                           "corollary3", "theorem5_II", "example2_ii", "corollary6"}) {
        const VerificationReport rep = check_theorem(id, quick());
        INFO(id, ": ", to_json(rep));
        CHECK(rep.passed);
        CHECK(rep.max_violation <= quick().tol);
    }
}

TEST_CASE("check_theorem: skips corpus members that miss preconditions") {
    std::vector<FunctionSpec> corpus = standard_corpus("corollary2b", 16, 7);
    const VerificationReport rep = check_theorem("corollary2b", corpus, quick());
    CHECK(rep.passed);
    bool noted = false;
    for (const std::string& n : rep.notes)
        if (n.find("skipped") != std::string::npos && n.find("a0 < 1/2") != std::string::npos)
            noted = true;
    CHECK(noted);
}

TEST_CASE("check_theorem: errors") {
    CHECK_THROWS_AS((void)check_theorem("theoremZZ", quick()), std::invalid_argument);
    CHECK_THROWS_AS((void)check_theorem("theoremA", std::vector<FunctionSpec>{}, quick()),
                    std::invalid_argument);
}

TEST_CASE("reports are bit-identical for identical seeds") {
    const VerificationReport a = check_theorem("theoremA", quick());
    const VerificationReport b = check_theorem("theoremA", quick());
    CHECK(to_json(a, false) == to_json(b, false));

    // different seeds draw a different sample corpus
    const auto c7 = standard_corpus("theoremA", 8, 7);
    const auto c8 = standard_corpus("theoremA", 8, 8);
    REQUIRE(c7.size() == c8.size());
    bool any_diff = false;
    for (std::size_t i = 0; i < c7.size(); ++i)
        if (label(c7[i]) != label(c8[i])) any_diff = true;
    CHECK(any_diff);
}

TEST_CASE("standard_corpus is deterministic and class-matched") {
    const auto a = standard_corpus("theoremA", 16, 7);
    const auto b = standard_corpus("theoremA", 16, 7);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(label(a[i]) == label(b[i]));
    const auto p = standard_corpus("theorem1_i", 4, 7);
    for (const FunctionSpec& spec : p) {
        const bool is_p = std::holds_alternative<PsiSpec>(spec.kind) ||
                          std::holds_alternative<HerglotzSpec>(spec.kind);
        CHECK(is_p);
    }
}

TEST_CASE("sharpness probes") {
    SUBCASE("exceed kinds find witnesses") {
        for (const char* id : {"theoremA", "theorem1_i", "corollary2", "theorem5_I"}) {
            const SharpnessResult res = sharpness_probe(id, 0.01, 64);
            INFO(id, ": ", res.note);
            CHECK(res.kind == SharpnessKind::exceed);
            CHECK(res.found);
            CHECK(res.witness.lhs > res.witness.rhs + 1e-6);
        }
    }
    SUBCASE("equality kinds exhibit the attained bound") {
        for (const char* id : {"lemmaG", "lemma1", "corollary4"}) {
            const SharpnessResult res = sharpness_probe(id, 0.01, 64);
            CHECK(res.kind == SharpnessKind::equality);
            CHECK(res.found);
        }
    }
    SUBCASE("informational kinds never assert") {
        for (const char* id : {"theorem6", "corollary6"}) {
            const SharpnessResult res = sharpness_probe(id, 0.01, 64);
            CHECK(res.kind == SharpnessKind::informational);
            CHECK_FALSE(res.note.empty());
        }
    }
    SUBCASE("ids without a sharpness clause") {
        CHECK(sharpness_kind("theoremB_area") == SharpnessKind::none);
        CHECK(sharpness_probe("theoremB_area").kind == SharpnessKind::none);
    }
}

TEST_CASE("equality_check: designated cases on a parameter grid") {
    for (int i = 0; i < 10; ++i) {
        EqualityParams prm;
        prm.a = 0.05 + 0.1 * i;
        prm.r = 0.08 + 0.072 * i;

        CHECK(equality_check(EqualityCase::lemma1_psi, prm) <= 1e-9);
        prm.power = i % 2 == 0 ? 1.0 : 0.5;
        CHECK(equality_check(EqualityCase::lemmaG_phi, prm) <= 1e-9);
        CHECK(equality_check(EqualityCase::eq35_psi, prm) <= 1e-9);
        prm.p = 1 + i % 3;
        prm.m = i % (prm.p + 1);
        CHECK(equality_check(EqualityCase::lemma2_A_closed_form, prm) <= 1e-9);
        CHECK(equality_check(EqualityCase::corollary4_mobius, prm) <= 1e-9);
        prm.k = 1 + i % 3;
        CHECK(equality_check(EqualityCase::remark2i_phi_zk, prm) <= 1e-9);
    }
}

TEST_CASE("problem-2 probe is informational and runs past the proven radius") {
    const Problem2Probe probe = problem2_probe(16, 7, 30, 64);
    CHECK(probe.largest_r > 0.0);
    CHECK(probe.note.find("non-normative") != std::string::npos);
}

TEST_CASE("report JSON re-parses with the flat schema") {
    const VerificationReport rep = check_theorem("theoremA", quick());
    const nlohmann::json j = nlohmann::json::parse(to_json(rep));
    CHECK(j["theorem_id"] == "theoremA");
    CHECK(j["passed"].is_boolean());
    CHECK(j["max_violation"].is_number());
    CHECK(j["theta_samples"] == quick().theta_samples);
}

TEST_CASE("theorem id list is stable and known") {
    CHECK(theorem_ids().size() == 35);
    for (const std::string& id : theorem_ids()) CHECK(theorem_known(id));
    CHECK_FALSE(theorem_known("theorem99"));
}
