#include <doctest.h>

#include <algorithm>
#include <set>

#include "hookpairs/critical.hpp"
#include "support.hpp"

using namespace hookpairs;
using hookpairs::testing::comp;

namespace {

std::set<std::vector<Int>> trimmed_set(const std::vector<ClosureEntry>& entries) {
    std::set<std::vector<Int>> out;
    for (const ClosureEntry& e : entries) out.insert(e.beta.trimmed().parts());
    return out;
}

// Assert the rank-values and divisibility-quotient patterns of the
// construction lemmas against a trace.
void check_lemma_patterns(const Composition& alpha, const ConstructResult& res) {
    const AlgorithmTrace& tr = res.trace;
    Composition a = alpha.padded(tr.ambient);
    std::vector<int> rb = rank_vector(res.beta);
    auto rank_of_w = [&](long long i) {
        return rb[static_cast<std::size_t>(tr.w[static_cast<std::size_t>(i - 1)] - 1)];
    };
    const long long l = tr.shift_l, m = tr.m, T = tr.T, t = tr.t, k = tr.k;
    for (long long i = 1; i <= l; ++i) REQUIRE(rank_of_w(i) == i);
    for (long long i = 1; i <= T; ++i) REQUIRE(rank_of_w(l + m + i) == l + i);
    for (long long i = 1; i <= t; ++i) REQUIRE(rank_of_w(l + i) == l + m * (k + 1) + i);
    for (long long i = 1; i <= m - t; ++i) REQUIRE(rank_of_w(l + t + i) == l + m * k + t + i);
    for (long long i = l + m + T + 1; i <= tr.ambient; ++i) REQUIRE(rank_of_w(i) == i);

    auto cert = is_critical_pair(a, res.beta, tr.m, tr.n);
    REQUIRE(cert.has_value());
    auto quotient_of_w = [&](long long i) {
        return cert->quotients[static_cast<std::size_t>(tr.w[static_cast<std::size_t>(i - 1)] - 1)];
    };
    for (long long i = 1; i <= l; ++i) REQUIRE(quotient_of_w(i) == 0);
    for (long long i = 1; i <= t; ++i) REQUIRE(quotient_of_w(l + i) == k + 1);
    for (long long i = t + 1; i <= m; ++i) REQUIRE(quotient_of_w(l + i) == k);
    for (long long i = 1; i <= T; ++i) REQUIRE(quotient_of_w(l + m + i) == -1);
    for (long long i = l + m + T + 1; i <= tr.ambient; ++i) REQUIRE(quotient_of_w(i) == 0);

    // xi is strictly decreasing and the sign conditions pin T uniquely
    for (std::size_t j = 1; j < tr.xi.size(); ++j) REQUIRE(tr.xi[j - 1] > tr.xi[j]);
    for (long long s = 1; s < T; ++s) {
        DeformedValue av = deformed(a, tr.w[static_cast<std::size_t>(l + m + s - 1)]);
        REQUIRE(av < tr.xi[static_cast<std::size_t>(m + s)]);
    }
    DeformedValue at_T = deformed(a, tr.w[static_cast<std::size_t>(l + m + T - 1)]);
    REQUIRE(at_T > tr.xi[static_cast<std::size_t>(m + T)]);

    REQUIRE(tr.T <= tr.T0);
    REQUIRE(Int(tr.T0) * tr.n <= a.weight());
    REQUIRE(Int(res.beta.length()) <= Int(alpha.length()) + alpha.weight());
}

}  // namespace

TEST_CASE("critical pair checker on the introduction's pair") {
    Composition alpha = comp({9, 8, 8, 7, 4, 3, 3, 2, 2});
    Composition beta = comp({0, 2, 2, 1, 7, 6, 6, 5, 5, 3, 3, 3, 3});
    auto cert = is_critical_pair(alpha, beta, 4, 3);
    REQUIRE(cert.has_value());
    CHECK(cert->m == 4);
    CHECK(cert->n == 3);
    CHECK(cert->quotients[0] == 3);   // alpha_1 - beta_1 = 9 = 3n
    CHECK(cert->quotients[4] == -1);  // alpha_5 - beta_5 = -3

    CHECK_FALSE(is_critical_pair(alpha, alpha, 4, 3).has_value());
    CHECK_FALSE(is_critical_pair(alpha, beta, 2, 3).has_value());
    CHECK_THROWS_AS(is_critical_pair(alpha, beta, 4, 0), DomainError);
}

TEST_CASE("m = 0 pairs need the extended flag") {
    Composition alpha = comp({3, 0});
    Composition beta = comp({2, 1});
    CHECK_THROWS_AS(is_critical_pair(alpha, beta, 0, 1), DomainError);
    auto cert = is_critical_pair(alpha, beta, 0, 1, true);
    REQUIRE(cert.has_value());
    CHECK(rank_vector(cert->alpha) == rank_vector(cert->beta));
    CHECK(cert->quotients[0] == 1);
    CHECK(cert->quotients[1] == -1);
}

TEST_CASE("refusal reports the first violated index") {
    CriticalCheck check = check_critical_pair(comp({3, 0}), comp({2, 1}), 1, 1);
    CHECK_FALSE(check.certificate.has_value());
    CHECK(check.first_violation == 1);
    check = check_critical_pair(comp({2, 1}), comp({3, 0}), 1, 1);
    CHECK(check.first_violation == 0);  // triangular order fails first
}

TEST_CASE("construction: partition example of the introduction") {
    auto res = construct_beta(comp({9, 8, 8, 7, 4, 3, 3, 2, 2}), Node{1, 7});
    CHECK(res.trace.m == 4);
    CHECK(res.trace.n == 3);
    CHECK(res.trace.shift_l == 0);
    CHECK(res.trace.T == 9);
    CHECK(res.trace.t == 1);
    CHECK(res.trace.k == 2);
    CHECK(res.beta.trimmed() == comp({0, 2, 2, 1, 7, 6, 6, 5, 5, 3, 3, 3, 3}));
    CHECK(rank_vector(res.beta.trimmed()) ==
          std::vector<int>{13, 10, 11, 12, 1, 2, 3, 4, 5, 6, 7, 8, 9});
    // integer parts of the xi scaffold: 9,8,8,7 then each minus 3 per block
    std::vector<long long> bases;
    for (const DeformedValue& v : res.trace.xi) bases.push_back(static_cast<long long>(v.base));
    CHECK(bases == std::vector<long long>{9, 8, 8, 7, 6, 5, 5, 4, 3, 2, 2, 1, 0, -1});
    check_lemma_patterns(comp({9, 8, 8, 7, 4, 3, 3, 2, 2}), res);
}

TEST_CASE("construction: composition example") {
    Composition alpha = comp({0, 3, 5, 6, 6, 1});
    auto res = construct_beta(alpha, Node{4, 4});
    CHECK(res.trace.m == 4);
    CHECK(res.trace.n == 3);
    CHECK(res.trace.T == 6);
    CHECK(res.trace.t == 2);
    CHECK(res.trace.k == 1);
    CHECK(res.beta.trimmed() == comp({3, 0, 2, 0, 0, 4, 3, 3, 3, 3}));
    CHECK(rank_vector(res.beta.trimmed()) == std::vector<int>{2, 8, 7, 9, 10, 1, 3, 4, 5, 6});
    // the xi sequence up to its 11th term
    std::vector<DeformedValue> xi{{6, 4}, {6, 5}, {5, 3},  {3, 2}, {3, 4},     {3, 5},
                                  {2, 3}, {0, 2}, {0, 4},  {0, 5}, {-1, 3}};
    REQUIRE(res.trace.xi.size() == 11);
    CHECK(res.trace.xi == xi);
    check_lemma_patterns(alpha, res);
}

TEST_CASE("construction: T = 1") {
    auto res = construct_beta(comp({2, 6, 5, 2}), Node{2, 4});
    CHECK(res.trace.m == 2);
    CHECK(res.trace.n == 3);
    CHECK(res.trace.T == 1);
    CHECK(res.beta.trimmed() == comp({5, 3, 5, 2}));
    CHECK(res.trace.xi == std::vector<DeformedValue>{{6, 2}, {5, 3}, {3, 2}, {2, 3}});
}

TEST_CASE("construction: node below the top rank") {
    auto res = construct_beta(comp({9, 8, 8, 5, 4, 4}), Node{2, 5});
    CHECK(res.trace.shift_l == 1);
    CHECK(res.trace.m == 3);
    CHECK(res.trace.n == 4);
    CHECK(res.beta.trimmed() == comp({9, 4, 4, 5, 8, 8}));
    CHECK(rank_vector(res.beta.trimmed()) == std::vector<int>{1, 5, 6, 4, 2, 3});
    check_lemma_patterns(comp({9, 8, 8, 5, 4, 4}), res);
}

TEST_CASE("construction: longer composition example") {
    // published beta and its ranks force T = 7 here (the prose value T = 6
    // does not reproduce them)
    Composition alpha = comp({0, 3, 5, 6, 6, 4, 1});
    REQUIRE(rank_vector(alpha) == std::vector<int>{7, 5, 3, 1, 2, 4, 6});
    auto res = construct_beta(alpha, Node{4, 4});
    CHECK(res.trace.m == 5);
    CHECK(res.trace.n == 3);
    CHECK(res.trace.T == 7);
    CHECK(res.beta.trimmed() == comp({3, 0, 2, 0, 0, 1, 4, 3, 3, 3, 3, 3}));
    CHECK(rank_vector(res.beta.trimmed()) ==
          std::vector<int>{2, 10, 8, 11, 12, 9, 1, 3, 4, 5, 6, 7});
    check_lemma_patterns(alpha, res);
}

TEST_CASE("construction: the unique partner of (7,6,6,4,4) at n = 2") {
    auto res = construct_beta(comp({7, 6, 6, 4, 4}), Node{1, 6});
    CHECK(res.trace.m == 3);
    CHECK(res.trace.n == 2);
    CHECK(res.beta.trimmed() == comp({1, 0, 0, 6, 6, 2, 2, 2, 2, 2, 2, 2}));
    check_lemma_patterns(comp({7, 6, 6, 4, 4}), res);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(construct_beta(comp({1, 0}), Node{1, 9}), DomainError);
    CHECK_THROWS_AS(construct_beta(comp({1, 0}), Node{2, 1}), DomainError);
    CHECK_THROWS_AS(construct_beta(comp({2, 1}), Node{1, 1}, 2), DomainError);  // too small
    auto res = construct_beta(comp({2, 1}), Node{1, 1}, 12);
    CHECK(res.trace.ambient == 12);
    CHECK(equal_mod_zeros(res.beta, construct_beta(comp({2, 1}), Node{1, 1}).beta));
}

TEST_CASE("chain walks down to beta") {
    std::vector<Composition> ch = chain(comp({2, 6, 5, 2}), Node{2, 4});
    REQUIRE(ch.size() == 2);
    CHECK(equal_mod_zeros(ch[0], comp({2, 6, 5, 2})));
    CHECK(ch[1].trimmed() == comp({5, 3, 5, 2}));

    ch = chain(comp({9, 8, 8, 7, 4, 3, 3, 2, 2}), Node{1, 7});
    REQUIRE(ch.size() == 10);
    CHECK(equal_mod_zeros(ch.front(), comp({9, 8, 8, 7, 4, 3, 3, 2, 2})));
    CHECK(ch.back().trimmed() == comp({0, 2, 2, 1, 7, 6, 6, 5, 5, 3, 3, 3, 3}));
    for (std::size_t s = 1; s < ch.size(); ++s) REQUIRE(triangle_greater(ch[s - 1], ch[s]));
}

TEST_CASE("closure follows proportional factors") {
    auto entries = closure(comp({6, 3, 1, 1}), 2, 3, 2);
    auto set = trimmed_set(entries);
    CHECK(set.count(comp({0, 3, 1, 1, 6}).parts()) == 1);
    CHECK(set.count(comp({0, 3, 4, 1, 3}).parts()) == 1);

    entries = closure(comp({9, 7, 6, 5, 2}), 2, 3, 1);
    set = trimmed_set(entries);
    std::set<std::vector<Int>> expected{
        comp({6, 7, 9, 5, 2}).parts(),
        comp({9, 7, 0, 2, 5, 3, 3}).parts(),
        comp({3, 7, 6, 5, 8}).parts(),
        comp({9, 1, 0, 5, 2, 6, 6}).parts(),
    };
    CHECK(set == expected);

    entries = closure(comp({9, 7, 6, 5, 2}), 2, 3, 2);
    set = trimmed_set(entries);
    CHECK(set.size() > 4);
    CHECK(set.count(comp({6, 7, 3, 5, 8}).parts()) == 1);

    // continuing from the first depth-1 partner: multiplicity 3, three more
    CHECK(factor_multiplicity(comp({6, 7, 9, 5, 2}), 2, 3) == 3);
    CHECK(closure(comp({6, 7, 9, 5, 2}), 2, 3, 1).size() == 3);
    // depth-1 entries record the hook factor actually used
    for (const ClosureEntry& e : closure(comp({6, 3, 1, 1}), 2, 3, 1)) {
        CHECK(e.step_m == 4);
        CHECK(e.step_n == 6);
    }
}

TEST_CASE("sign-change scan predicts further proportional hooks") {
    auto extra = detect_extra_hooks(comp({9, 7, 6, 5, 2}), Node{1, 7});
    REQUIRE(extra.size() == 1);
    CHECK(extra[0].first == Node{2, 2});
    CHECK(extra[0].second.slope == 4);
    CHECK(extra[0].second.intercept == 6);

    CHECK(detect_extra_hooks(comp({2, 6, 5, 2}), Node{2, 4}).empty());
    // multiplicity one: a single sign change, nothing past T
    CHECK(detect_extra_hooks(comp({6, 3, 1, 1}), Node{1, 1}).empty());
}

TEST_CASE("soundness and lemma patterns on all small compositions") {
    std::vector<Composition> all;
    for (long long a = 0; a <= 6; ++a)
        for (long long b = 0; a + b <= 6; ++b)
            for (long long c = 0; a + b + c <= 6; ++c) all.push_back(comp({a, b, c}));
    for (const Composition& alpha : all) {
        for (int i = 1; i <= alpha.length(); ++i) {
            long long ai = static_cast<long long>(alpha.part(i));
            for (int j = 1; j <= ai; ++j) {
                auto res = construct_beta(alpha, Node{i, j});
                check_lemma_patterns(alpha, res);
                // T is the unique sign change: rescan exhaustively
                std::vector<Composition> ch = chain(alpha, Node{i, j});
                REQUIRE(static_cast<long long>(ch.size()) == res.trace.T + 1);
                REQUIRE(ch.back() == res.beta);
                for (std::size_t st = 1; st < ch.size(); ++st)
                    REQUIRE(triangle_greater(ch[st - 1], ch[st]));
            }
        }
    }
}
