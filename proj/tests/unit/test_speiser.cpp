#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "speiser/generators.hpp"
#include "speiser/speiser.hpp"

using namespace speiser;

namespace {

constexpr std::int64_t kInf = -1;

// Theta graph whose face sizes are dictated by hints, corner by corner.
class HintedTheta : public FiniteOracle {
public:
    explicit HintedTheta(std::vector<std::int64_t> k)
        : FiniteOracle(fixtures::theta(), "hinted-theta", {0, 1}), k_(std::move(k)) {}
    std::optional<FaceSize> face_hint(VertexId, int corner) const override {
        const std::int64_t k = k_[static_cast<std::size_t>(corner)];
        return k == kInf ? FaceSize::unbounded() : FaceSize::of_length(2 * k);
    }

private:
    std::vector<std::int64_t> k_;
};

Rational excess_by_formula(const std::vector<std::int64_t>& ks) {
    Rational e(2);
    for (std::int64_t k : ks) e -= k == kInf ? Rational(1) : Rational(1) - Rational(1, k);
    return e;
}

Rational ball_sum(const GraphOracle& g, VertexId center, int radius) {
    const BfsLayers layers = bfs_layers(g, center, radius);
    Rational sum(0);
    for (VertexId v : layers.vertices) sum += excess(g, v);
    return sum;
}

}  // namespace

TEST_CASE("theta graph with alternating parity is a Speiser graph for q=3") {
    const SpeiserValidation v = validate_speiser(fixtures::theta_oracle(), 3, 2);
    CHECK(v.ok);
    CHECK(v.violations.empty());
    CHECK(v.vertices_checked == 2);
    CHECK(v.infinite_corners == 0);
    REQUIRE(v.graph.has_value());
    CHECK(v.graph->q == 3);
}

TEST_CASE("degree below three is rejected") {
    auto g = std::make_shared<FiniteOracle>(fixtures::cycle(6), "c6", std::vector<int>{0, 1, 0, 1, 0, 1});
    try {
        validate_speiser(g, 2, 3);
        FAIL("expected BadDegree");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadDegree);
    }
}

TEST_CASE("wrong degree and broken bipartiteness are reported") {
    const SpeiserValidation deg = validate_speiser(fixtures::theta_oracle(), 4, 2);
    CHECK(!deg.ok);
    CHECK(std::any_of(deg.violations.begin(), deg.violations.end(),
                      [](const Violation& x) { return x.code == ErrorCode::NotHomogeneous; }));
    auto same = std::make_shared<FiniteOracle>(fixtures::theta(), "theta", std::vector<int>{0, 0});
    CHECK(!validate_speiser(same, 3, 2).ok);
    CHECK_THROWS_AS(validate_speiser_or_throw(same, 3, 2), Error);
}

TEST_CASE("trivalent tree validates with every face infinite") {
    const Family f = make_family("tree-3");
    const SpeiserValidation v = validate_speiser(f.oracle, 3, 5);
    CHECK(v.ok);
    CHECK(v.faces_checked == 3 * v.vertices_checked);
    CHECK(v.infinite_corners == v.faces_checked);
}

TEST_CASE("catalog Speiser families validate") {
    for (const char* tag : {"grid-z2", "sine", "modular-lambda", "tr-hexagon", "appendix-a", "counterexample3"}) {
        CAPTURE(tag);
        const Family f = make_family(tag);
        CHECK(validate_speiser(f.oracle, f.q, 6).ok);
    }
}

TEST_CASE("theta labels are forced by the anchor") {
    const auto g = fixtures::theta_oracle();
    const auto& rg = static_cast<const FiniteOracle&>(*g).graph();
    const VertexId u = rg.id(0), v = rg.id(1);
    const Labeling lab = label_faces(*g, {u, v}, 3, Corner{u, 0}, 0);
    CHECK(lab.corner_label.at(u)[0] == 0);
    std::vector<int> at_u = lab.corner_label.at(u);
    std::sort(at_u.begin(), at_u.end());
    CHECK(at_u == std::vector<int>{0, 1, 2});
    CHECK(lab.face_classes == 1);

    // corner c of a vertex lies on the face containing the dart in slot c + 1
    const auto faces = trace_faces(rg);
    const auto face_of = face_index(rg, faces);
    std::map<std::size_t, std::set<int>> labels_per_face;
    for (std::size_t x = 0; x < 2; ++x)
        for (int c = 0; c < 3; ++c)
            labels_per_face[face_of[rg.half_edge(x, (c + 1) % 3)]].insert(lab.corner_label.at(rg.id(x))[c]);
    CHECK(labels_per_face.size() == 3);
    for (const auto& [face, labels] : labels_per_face) CHECK(labels.size() == 1);
}

TEST_CASE("cyclic rule: labels step up around cross vertices and down around circle vertices") {
    const Family f = make_family("tr-hexagon");
    const SpeiserGraph sg = validate_speiser_or_throw(f.oracle, 3, 5);
    const BfsLayers layers = bfs_layers(*f.oracle, f.oracle->seed(), 5);
    const Labeling lab = label_faces(*f.oracle, layers.vertices, 3, Corner{f.oracle->seed(), 0}, 0, &sg.parity);
    for (VertexId v : layers.vertices) {
        const auto& l = lab.corner_label.at(v);
        const int step = sg.parity.at(v) == 0 ? 1 : 2;
        for (int c = 0; c < 3; ++c) CHECK(l[static_cast<std::size_t>((c + 1) % 3)] == (l[static_cast<std::size_t>(c)] + step) % 3);
    }
}

TEST_CASE("sine graph labels are periodic along the line") {
    const Family f = make_family("sine");
    const BfsLayers layers = bfs_layers(*f.oracle, f.oracle->seed(), 12);
    const Labeling lab = label_faces(*f.oracle, layers.vertices, 3, Corner{f.oracle->seed(), 0}, 0);
    std::size_t compared = 0;
    for (std::int64_t x = -4; x <= 4; ++x)
        for (int side = 0; side < 2; ++side) {
            const VertexId a = SineOracle::encode(x, side), b = SineOracle::encode(x + 2, side);
            if (!lab.corner_label.count(a) || !lab.corner_label.count(b)) continue;
            CHECK(lab.corner_label.at(a) == lab.corner_label.at(b));
            ++compared;
        }
    CHECK(compared > 10);
}

TEST_CASE("mispermuted rotation cannot be labeled") {
    // theta with the same rotation at both ends: one face through all corners
    const RotationGraph bad = build_rotation_graph({{"u", {"a", "b", "c"}}, {"v", {"a", "b", "c"}}},
                                                   {{"a", {"u", "v"}}, {"b", {"u", "v"}}, {"c", {"u", "v"}}});
    const FiniteOracle g(bad, "bad-theta", {0, 1});
    try {
        label_faces(g, {bad.id(0), bad.id(1)}, 3, Corner{bad.id(0), 0}, 0);
        FAIL("expected InconsistentLabeling");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InconsistentLabeling);
    }
}

TEST_CASE("excess from face half-sizes") {
    const std::vector<std::vector<std::int64_t>> cases = {{3, 3, 3}, {1, kInf, kInf}, {1, 1, kInf}, {2, 3, 6}, {kInf, kInf, kInf}};
    const std::vector<Rational> want = {Rational(0), Rational(0), Rational(1), Rational(0), Rational(-1)};
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const HintedTheta g(cases[i]);
        CHECK(excess_by_formula(cases[i]) == want[i]);
        CHECK(excess(g, g.seed()) == want[i]);
    }
    const auto plain = fixtures::theta_oracle();
    CHECK(excess(*plain, plain->seed()) == Rational(2));
}

TEST_CASE("excess is constant on the modular-lambda and sine graphs") {
    const auto lam = make_family("modular-lambda").oracle;
    for (VertexId v : bfs_layers(*lam, lam->seed(), 4).vertices) CHECK(excess(*lam, v) == Rational(-1));
    const auto sine = make_family("sine").oracle;
    for (VertexId v : bfs_layers(*sine, sine->seed(), 6).vertices) CHECK(excess(*sine, v) == Rational(0));
}

TEST_CASE("mean excess of modular-lambda is -1 at every radius") {
    const auto g = make_family("modular-lambda").oracle;
    const MeanExcessProfile p = mean_excess_profile(*g, g->seed(), 8);
    REQUIRE(p.records.size() == 9);
    for (const auto& r : p.records) CHECK(r.average == Rational(-1));
}

TEST_CASE("mean excess of the appendix-A graph tends to 0") {
    // Branch vertices lie on three infinite faces (E = -1); paired path
    // vertices on a 2-gon and two infinite faces (E = 0).  Up to level n the
    // ball holds 1 + sum 3*2^(k-1) branch vertices and 1 + sum 3*2^(k-1) l_k vertices.
    const auto l = default_appendix_lengths(8);
    const auto g = gen_appendixA(l, true);
    const MeanExcessProfile p = mean_excess_profile(*g, g->seed(), static_cast<int>(g->level_radius(6)));
    std::int64_t branch = 1, total = 1;
    double prev = 1;
    for (int n = 1; n <= 6; ++n) {
        branch += 3 * (std::int64_t{1} << (n - 1));
        total += 3 * (std::int64_t{1} << (n - 1)) * l[static_cast<std::size_t>(n - 1)];
        const auto& rec = p.records[static_cast<std::size_t>(g->level_radius(n))];
        CHECK(rec.vertex_count == static_cast<std::size_t>(total));
        CHECK(rec.average == Rational(-branch, total));
        CHECK(branch / static_cast<double>(total) < prev);
        prev = branch / static_cast<double>(total);
    }
}

TEST_CASE("ball excess sums") {
    const auto lam = make_family("modular-lambda").oracle;
    for (int r : {0, 3, 6}) {
        const ExcessBound b = ball_excess_bound(*lam, lam->seed(), r);
        CHECK(b.sum == Rational(-static_cast<std::int64_t>(b.vertex_count)));
        CHECK(b.bound_ok);
    }
    const auto hex = make_family("tr-hexagon").oracle;
    const ExcessBound b8 = ball_excess_bound(*hex, hex->seed(), 8);
    CHECK(b8.sum == ball_sum(*hex, hex->seed(), 8));
    CHECK(b8.bound_ok);
    CHECK(b8.sum <= Rational(2));

    const HintedTheta one({1, 1, kInf});
    const ExcessBound b0 = ball_excess_bound(one, one.seed(), 0);
    CHECK(b0.vertex_count == 1);
    CHECK(b0.sum == Rational(1));
    CHECK(b0.bound_ok);
}

TEST_CASE("excess is invariant under relabeling the graph") {
    const FiniteOracle a(fixtures::tetrahedron());
    const FiniteOracle b(build_rotation_graph(
        {{"z", {"c", "e", "f"}}, {"y", {"b", "d", "e"}}, {"x", {"a", "f", "d"}}, {"w", {"b", "c", "a"}}},
        {{"f", {"z", "x"}}, {"e", {"y", "z"}}, {"d", {"x", "y"}}, {"c", {"w", "z"}}, {"b", {"w", "y"}}, {"a", {"w", "x"}}}));
    CHECK(canonical_code(a.graph()) == canonical_code(b.graph()));
    std::multiset<Rational> ea, eb;
    for (std::size_t v = 0; v < 4; ++v) {
        ea.insert(excess(a, a.graph().id(v)));
        eb.insert(excess(b, b.graph().id(v)));
    }
    CHECK(ea == eb);
    CHECK(*ea.begin() == Rational(1));  // three triangles: 2 - 3 (1 - 2/3)
}
