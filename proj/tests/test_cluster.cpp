#include "catch_amalgamated.hpp"

#include "sislne/cluster.hpp"

#include <random>

using namespace sislne;

TEST_CASE("single blow-up") {
    Cluster c = Cluster::origin();
    CHECK(c.euler_weights() == std::vector<int>{-1});
    CHECK(c.multiplicities() == std::vector<Integer>{1});
    CHECK(c.inner_rate(0) == Rational(1));
    auto mo = matrix_oracle(c);
    CHECK(mo.m == std::vector<Rational>{Rational(1)});
    CHECK(mo.q == std::vector<Rational>{Rational(1)});
}

TEST_CASE("(2,3)-cusp resolution") {
    // free on root, then satellite root x E1
    Cluster c = cusp_cluster(2);
    REQUIRE(c.size() == 3);
    CHECK(c.euler_weights() == std::vector<int>{-3, -2, -1});
    CHECK(c.multiplicities() == std::vector<Integer>{1, 1, 2});
    // adjacency after separation: E2-root, E2-E1
    CHECK(c.adjacent(2, 0));
    CHECK(c.adjacent(2, 1));
    CHECK_FALSE(c.adjacent(0, 1));
    // inner rate at the node: (gamma.gamma') = 6, m = 2 -> q = 3/2
    CHECK(c.inner_rate(2) == Rational(3, 2));

    // frozen intersection matrix and its exact inverse data
    auto I = c.intersection_matrix();
    CHECK(I == std::vector<std::vector<Rational>>{
                   {Rational(-3), Rational(0), Rational(1)},
                   {Rational(0), Rational(-2), Rational(1)},
                   {Rational(1), Rational(1), Rational(-1)}});
    auto mo = matrix_oracle(c);
    CHECK(mo.m == std::vector<Rational>{Rational(1), Rational(1), Rational(2)});
    CHECK(mo.q[2] == Rational(3, 2));
    check_oracle_agreement(c);
}

TEST_CASE("(3,4)-cusp resolution") {
    Cluster c = cusp_cluster(3);
    REQUIRE(c.size() == 4);
    CHECK(c.euler_weights() == std::vector<int>{-4, -2, -2, -1});
    CHECK(c.multiplicities() == std::vector<Integer>{1, 1, 2, 3});
    // chain E1-E2-E3-root
    CHECK(c.adjacent(1, 2));
    CHECK(c.adjacent(2, 3));
    CHECK(c.adjacent(3, 0));
    CHECK_FALSE(c.adjacent(0, 1));
    CHECK_FALSE(c.adjacent(0, 2));
    CHECK(c.inner_rate(3) == Rational(4, 3));
    check_oracle_agreement(c);
}

TEST_CASE("cusp node rates follow (k+1)/k") {
    for (int k = 2; k <= 6; ++k) {
        Cluster c = cusp_cluster(k);
        CHECK(c.inner_rate(c.size() - 1) == Rational(k + 1, k));
        CHECK(c.multiplicities().back() == Integer(k));
        CHECK(c.euler_weights()[0] == -1 - k);
        check_oracle_agreement(c);
    }
}

TEST_CASE("satellite requires intersecting divisors") {
    Cluster c = cusp_cluster(2);
    CHECK_THROWS_AS(c.blow_up_satellite(0, 1), ClusterError); // separated already
    CHECK_THROWS_AS(c.blow_up_satellite(1, 1), ClusterError);
    CHECK_NOTHROW(c.blow_up_satellite(0, 2));
}

TEST_CASE("free blow-up raises the rate by one") {
    Cluster c = Cluster::origin();
    std::mt19937 rng(5150);
    for (int step = 0; step < 8; ++step) {
        std::uniform_int_distribution<int> pick(0, c.size() - 1);
        int on = pick(rng);
        Rational before = c.inner_rate(on);
        c = c.blow_up_free(on);
        CHECK(c.inner_rate(c.size() - 1) == before + 1);
    }
}

TEST_CASE("rates increase along the root-to-leaf path of a cusp tree") {
    for (int k = 2; k <= 6; ++k) {
        Cluster c = cusp_cluster(k);
        // path root -> node -> bamboo -> first free point
        std::vector<int> path{0, c.size() - 1};
        for (int v = c.size() - 2; v >= 1; --v) path.push_back(v);
        auto q = c.inner_rates();
        for (size_t i = 0; i + 1 < path.size(); ++i)
            CHECK(q[static_cast<size_t>(path[i])] < q[static_cast<size_t>(path[i + 1])]);
    }
}

TEST_CASE("bouquet root weight is -1 - sum of multiplicities") {
    // three cusp clusters k = 2, 3, 4 sharing one root
    std::vector<int> ks{2, 3, 4};
    Cluster c = Cluster::origin();
    for (int k : ks) {
        int free_pt = c.size();
        c = c.blow_up_free(0);
        int last = free_pt;
        for (int i = 2; i <= k; ++i) {
            c = c.blow_up_satellite(0, last);
            last = c.size() - 1;
        }
        CHECK(c.multiplicities()[static_cast<size_t>(last)] == Integer(k));
    }
    int sum = 2 + 3 + 4;
    CHECK(c.euler_weights()[0] == -1 - sum);
    check_oracle_agreement(c);
}

TEST_CASE("random blow-up sequences: dual oracle agreement") {
    std::mt19937 rng(987654);
    for (int trial = 0; trial < 200; ++trial) {
        Cluster c = Cluster::origin();
        std::uniform_int_distribution<int> lend(1, 11);
        int steps = lend(rng);
        for (int s = 0; s < steps; ++s) {
            std::uniform_int_distribution<int> coin(0, 1);
            const auto& adj = c.adjacency();
            if (coin(rng) == 1 && !adj.empty()) {
                std::uniform_int_distribution<int> pick(0, static_cast<int>(adj.size()) - 1);
                auto it = adj.begin();
                std::advance(it, pick(rng));
                c = c.blow_up_satellite(it->first, it->second);
            } else {
                std::uniform_int_distribution<int> pick(0, c.size() - 1);
                c = c.blow_up_free(pick(rng));
            }
        }
        REQUIRE(is_negative_definite(c.intersection_matrix()));
        check_oracle_agreement(c);
    }
}

TEST_CASE("negative definiteness after every step of a growing cluster") {
    std::mt19937 rng(31337);
    Cluster c = Cluster::origin();
    for (int s = 0; s < 12; ++s) {
        const auto& adj = c.adjacency();
        std::uniform_int_distribution<int> coin(0, 2);
        if (coin(rng) == 0 && !adj.empty()) {
            auto it = adj.begin();
            std::uniform_int_distribution<int> pick(0, static_cast<int>(adj.size()) - 1);
            std::advance(it, pick(rng));
            c = c.blow_up_satellite(it->first, it->second);
        } else {
            std::uniform_int_distribution<int> pick(0, c.size() - 1);
            c = c.blow_up_free(pick(rng));
        }
        CHECK(is_negative_definite(c.intersection_matrix()));
    }
}
