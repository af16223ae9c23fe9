#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "bier/edgedecomp.hpp"
#include "bier/error.hpp"
#include "support.hpp"

using namespace bier;
using testing::cx;
using testing::face;
using testing::mc;

namespace {

SimplicialComplex cycle(int n)
{
    std::vector<Face> edges;
    for (int k = 0; k < n; ++k)
        edges.push_back(make_face({VertexLabel::atom("", k + 1), VertexLabel::atom("", (k + 1) % n + 1)}));
    return complex_from_facets(edges);
}

const Multicomplex& octahedron_m()
{
    static const auto m = mc({2, 2}, {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {0, 2}});
    return m;
}

VertexLabel top(const Multicomplex& m) { return VertexLabel::indexed(1, m.cap()[0]); }
VertexLabel bottom(const Multicomplex& m) { return VertexLabel::indexed(static_cast<int>(m.nvars()), 0); }

bool has_vertex(const Multicomplex& m, const VertexLabel& v)
{
    const auto vs = bier_sphere(m).vertices();
    return std::find(vs.begin(), vs.end(), v) != vs.end();
}

bool both_extremes(const Multicomplex& m) { return has_vertex(m, top(m)) && has_vertex(m, bottom(m)); }

int count_kind(const CertificateNode& node, CertificateNode::Kind kind)
{
    int k = node.kind == kind;
    for (const auto& c : node.children) k += count_kind(c, kind);
    return k;
}

}  // namespace

TEST_CASE("base cases")
{
    CHECK(is_simplex_boundary(simplex_boundary(face("1 2 3"))));
    CHECK(is_simplex_boundary(simplex_boundary(face("1 2"))));
    CHECK_FALSE(is_simplex_boundary(complex_from_facets({})));
    CHECK_FALSE(is_simplex_boundary(cycle(4)));

    const auto r = is_edge_decomposable(simplex_boundary(face("1 2 3")));
    CHECK(r.outcome == Outcome::yes);
    REQUIRE(r.certificate);
    CHECK(r.certificate->kind == CertificateNode::Kind::simplex_boundary);
    CHECK(is_edge_decomposable(complex_from_facets({})).outcome == Outcome::yes);
}

TEST_CASE("generic search")
{
    for (int n = 3; n <= 8; ++n) {
        const auto r = is_edge_decomposable(cycle(n));
        CHECK(r.outcome == Outcome::yes);
        REQUIRE(r.certificate);
        const auto report = verify_certificate(*r.certificate);
        CHECK(report.ok);
        CHECK(report.edge_steps == n - 3);
    }
    const auto octa = bier_sphere(octahedron_m());
    const auto r = is_edge_decomposable(octa);
    CHECK(r.outcome == Outcome::yes);
    CHECK(verify_certificate(*r.certificate).ok);

    // no edge of a bowtie or of two triangles passes the Link condition
    CHECK(is_edge_decomposable(cx("o a;o b;a b;o c;o d;c d")).outcome == Outcome::no);
    CHECK(is_edge_decomposable(cx("a b;b c;a c;d e;e f;d f")).outcome == Outcome::no);
    CHECK_FALSE(is_edge_decomposable(cx("a b;b c;a c;d e;e f;d f")).certificate);

    CHECK_THROWS_AS(is_edge_decomposable(cx("1 2;3")), InvalidInput);
    CHECK(is_edge_decomposable(SimplicialComplex()).outcome == Outcome::no);
}

TEST_CASE("budget")
{
    const auto big = bier_sphere(mc({2, 2, 1}, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}}));
    const auto starved = is_edge_decomposable(big, 2);
    CHECK(starved.outcome == Outcome::unknown);
    CHECK_FALSE(starved.certificate);
    const auto full = is_edge_decomposable(big);
    CHECK(full.outcome == Outcome::yes);
    CHECK(full.steps > 2);
}

TEST_CASE("reduction step")
{
    const auto r = reduction_step(mc({2, 2}, {{0, 0}, {1, 0}, {2, 0}}));
    REQUIRE(r);
    CHECK_FALSE(r->dual);
    CHECK(r->reduce.result == mc({4}, {{0}, {1}, {2}}));
    CHECK(r->reduce.map.at(VertexLabel::indexed(2, 1)) == VertexLabel::indexed(1, 3));

    CHECK_FALSE(reduction_step(octahedron_m()));

    // x_n^(c_n) missing: everything of full y-degree lies in M
    const auto d = reduction_step(mc({1, 1}, {{0, 0}, {0, 1}, {1, 0}}));
    REQUIRE(d);
    CHECK(d->dual);

    auto check = [](const Multicomplex& m) {
        if (m.nvars() < 2) return;
        const auto r = reduction_step(m);
        const int n = static_cast<int>(m.nvars());
        const bool last_full = has_vertex(m, bottom(m)) && has_vertex(m, VertexLabel::indexed(n, m.cap()[m.nvars() - 1]));
        CHECK(r.has_value() == !last_full);
        if (!r) return;
        auto sphere = bier_sphere(m);
        if (r->dual) {
            sphere = relabel(sphere, r->dual->map);
            CHECK(sphere == bier_sphere(r->dual->result));
        }
        CHECK(relabel(sphere, r->reduce.map) == bier_sphere(r->reduce.result));
        CHECK(r->reduce.result.nvars() == m.nvars() - 1);
    };
    testing::for_each_proper(2, 3, check);
    testing::for_each_proper(3, 2, check);
}

TEST_CASE("key lemma")
{
    const auto lk = keylemma_link(octahedron_m());
    CHECK(lk.restricted.cap() == Cap({1, 2}));
    CHECK(lk.step.result.cap() == Cap({1, 1}));
    CHECK(bier_sphere(lk.step.result).facets().size() == 2);

    const auto co = keylemma_contraction(octahedron_m());
    CHECK(co.result == mc({4}, {{0}, {1}, {2}}));
    CHECK(co.map.at(VertexLabel::indexed(2, 2)) == VertexLabel::indexed(1, 4));

    CHECK_THROWS(keylemma_link(mc({2, 2}, {{0, 0}, {1, 0}, {2, 0}})));

    auto check = [](const Multicomplex& m) {
        if (m.nvars() < 2 || !both_extremes(m)) return;
        const auto sphere = bier_sphere(m);
        const auto l = keylemma_link(m);
        CHECK(relabel(link(sphere, make_face({top(m), bottom(m)})), l.step.map) == bier_sphere(l.step.result));
        const auto c = keylemma_contraction(m);
        CHECK(c.result.is_proper());
        const auto contracted = contraction(sphere, bottom(m), top(m));
        CHECK(relabel(contracted, c.map) == bier_sphere(c.result));
        CHECK(is_sphere_surrogate(contracted));
        CHECK(link_condition(sphere, top(m), bottom(m)));
    };
    testing::for_each_proper(2, 3, check);
    testing::for_each_proper(3, 2, check);
}

TEST_CASE("Bier sphere certificates")
{
    const auto one = bier_decomposition(mc({4}, {{0}, {1}}));
    CHECK(one.kind == CertificateNode::Kind::join);
    CHECK(verify_certificate(one).ok);

    const auto octa = bier_decomposition(octahedron_m());
    const auto report = verify_certificate(octa);
    CHECK(report.ok);
    CHECK(report.nodes == 10);
    CHECK(report.edge_steps == 2);
    CHECK(octa.complex == bier_sphere(octahedron_m()));

    CHECK_THROWS_AS(bier_decomposition(mc({1}, {{0}, {1}})), Undefined);

    auto check = [](const Multicomplex& m) {
        const auto cert = bier_decomposition(m);
        const auto r = verify_certificate(cert);
        CHECK_MESSAGE(r.ok, r.failure);
        CHECK(cert.complex == bier_sphere(m));
    };
    testing::for_each_proper(1, 5, check);
    testing::for_each_proper(2, 3, check);
    testing::for_each_proper(3, 1, check);
    std::mt19937_64 rng(19);
    for (int k = 0; k < 12; ++k) check(testing::random_proper(3, 2, rng));
}

TEST_CASE("tampered certificates are rejected")
{
    const auto good = bier_decomposition(octahedron_m());
    REQUIRE(verify_certificate(good).ok);

    auto bad_leaf = good;
    auto* node = &bad_leaf;
    while (!node->children.empty()) node = &node->children.front();
    node->complex = cycle(4);
    CHECK_FALSE(verify_certificate(bad_leaf).ok);

    auto bad_root = good;
    bad_root.complex = cycle(5);
    const auto r = verify_certificate(bad_root);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.failure.empty());

    auto no_children = good;
    no_children.children.clear();
    CHECK_FALSE(verify_certificate(no_children).ok);

    // an edge that fails the Link condition
    CertificateNode tri;
    tri.kind = CertificateNode::Kind::edge;
    tri.complex = cycle(4);
    tri.edge = std::pair{VertexLabel::atom("", 1), VertexLabel::atom("", 3)};
    CHECK_FALSE(verify_certificate(tri).ok);
}

TEST_CASE("certificate output")
{
    const auto cert = bier_decomposition(octahedron_m());
    const auto j = nlohmann::json::parse(certificate_json(cert));
    CHECK(j["kind"] == kind_name(cert.kind));
    CHECK(j["children"].size() == cert.children.size());
    CHECK(count_kind(cert, CertificateNode::Kind::edge) == 2);
    const auto text = certificate_text(cert);
    CHECK(text.find("edge") != std::string::npos);
    CHECK(text.find("x1^(2)") != std::string::npos);
    for (auto k : {CertificateNode::Kind::simplex_boundary, CertificateNode::Kind::empty, CertificateNode::Kind::edge,
                   CertificateNode::Kind::join, CertificateNode::Kind::reduction, CertificateNode::Kind::dual,
                   CertificateNode::Kind::permutation, CertificateNode::Kind::link_map,
                   CertificateNode::Kind::contraction_map})
        CHECK_FALSE(kind_name(k).empty());
}
