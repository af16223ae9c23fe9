#include "bier/edgedecomp.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>
#include <sstream>

#include "bier/bier.hpp"
#include "bier/error.hpp"

namespace bier {

namespace {

using Kind = CertificateNode::Kind;

std::string cap_text(const Cap& c)
{
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
}

std::string bier_note(const Multicomplex& m)
{
    return "Bier c=" + cap_text(m.cap()) + " |M|=" + std::to_string(m.size());
}

CertificateNode leaf_for(const SimplicialComplex& complex)
{
    CertificateNode node;
    node.complex = complex;
    node.kind = complex.is_empty_face_only() ? Kind::empty : Kind::simplex_boundary;
    return node;
}

bool is_base(const SimplicialComplex& complex)
{
    return complex.is_empty_face_only() || is_simplex_boundary(complex);
}

SimplicialComplex sphere_of(const Multicomplex& m)
{
    return bier_sphere(m, SphereMethod::facet_formula, VerifyMode::off);
}

bool has_vertex(const SimplicialComplex& complex, const VertexLabel& v)
{
    const auto vs = complex.vertices();
    return std::binary_search(vs.begin(), vs.end(), v);
}

void require_equal(const SimplicialComplex& a, const SimplicialComplex& b, const std::string& what)
{
    if (a != b) throw VerificationFailure(what);
}

// Variables i and k exchanged, in M and in the vertex labels.
BierStep swap_variables(const Multicomplex& m, std::size_t i, std::size_t k)
{
    std::vector<int> cap = m.cap().entries();
    std::swap(cap[i], cap[k]);
    std::vector<Exponent> members;
    for (auto a : m.members()) {
        std::swap(a[i], a[k]);
        members.push_back(std::move(a));
    }
    BierStep step{Multicomplex::from_members(Cap(cap), std::move(members)), {}};
    for (int j = 0; j <= m.cap()[i]; ++j) step.map[level_vertex(i, j)] = level_vertex(k, j);
    for (int j = 0; j <= m.cap()[k]; ++j) step.map[level_vertex(k, j)] = level_vertex(i, j);
    require_equal(relabel(sphere_of(m), step.map), sphere_of(step.result),
                  "exchanging two variables does not carry Bier_c(M) to the permuted sphere");
    return step;
}

// M has no monomial divisible by x_n.
BierStep drop_last(const Multicomplex& m)
{
    const Cap& c = m.cap();
    const std::size_t n = m.nvars();
    std::vector<int> cap(c.entries().begin(), c.entries().end() - 1);
    cap[0] += c[n - 1];
    std::vector<Exponent> members;
    for (const auto& a : m.members()) members.emplace_back(a.begin(), a.end() - 1);
    BierStep step{Multicomplex::from_members(Cap(cap), std::move(members)), {}};
    for (int j = 1; j <= c[n - 1]; ++j) step.map[level_vertex(n - 1, j)] = level_vertex(0, c[0] + j);
    return step;
}

}  // namespace

std::string kind_name(Kind kind)
{
    switch (kind) {
    case Kind::simplex_boundary: return "simplex_boundary";
    case Kind::empty: return "empty";
    case Kind::edge: return "edge";
    case Kind::join: return "join";
    case Kind::reduction: return "reduction";
    case Kind::dual: return "dual";
    case Kind::permutation: return "permutation";
    case Kind::link_map: return "link_map";
    case Kind::contraction_map: return "contraction_map";
    }
    return "?";
}

bool is_simplex_boundary(const SimplicialComplex& complex)
{
    if (complex.is_void() || complex.is_empty_face_only()) return false;
    const auto vs = complex.vertices();
    if (vs.size() < 2 || complex.facets().size() != vs.size()) return false;
    return std::all_of(complex.facets().begin(), complex.facets().end(),
                       [&](const Face& f) { return f.size() + 1 == vs.size(); });
}

// ---------------------------------------------------------------------------
// Certificate checking and output

namespace {

void check_node(const CertificateNode& node, CertificateReport& report)
{
    if (!report.failure.empty()) return;
    ++report.nodes;
    auto fail = [&](const std::string& why) {
        if (report.failure.empty()) report.failure = kind_name(node.kind) + " node: " + why;
    };
    const auto& c = node.complex;
    if (!is_sphere_surrogate(c)) return fail("complex fails the sphere surrogate");

    auto expect_children = [&](std::size_t k) {
        if (node.children.size() != k) {
            fail("expected " + std::to_string(k) + " children");
            return false;
        }
        return true;
    };

    switch (node.kind) {
    case Kind::empty:
        if (!c.is_empty_face_only()) return fail("complex is not {emptyset}");
        expect_children(0);
        return;
    case Kind::simplex_boundary:
        if (!is_simplex_boundary(c)) return fail("complex is not a simplex boundary");
        expect_children(0);
        return;
    case Kind::edge: {
        if (!expect_children(2)) return;
        if (!node.edge) return fail("no edge recorded");
        const auto& [removed, kept] = *node.edge;
        if (!c.is_pure()) return fail("complex is not pure");
        if (removed == kept || !c.contains(make_face({removed, kept}))) return fail("recorded edge is not an edge");
        if (!link_condition_by_links(c, removed, kept)) return fail("Link condition fails on links");
        if (!link_condition_by_ideal(c, removed, kept)) return fail("Link condition fails on the ideal");
        if (node.children[0].complex != link(c, make_face({removed, kept}))) return fail("recorded link differs");
        if (node.children[1].complex != contraction(c, removed, kept)) return fail("recorded contraction differs");
        ++report.edge_steps;
        break;
    }
    case Kind::join: {
        if (!expect_children(3)) return;
        if (join(node.children[0].complex, node.children[1].complex) != c) return fail("factors do not join to the complex");
        if (node.children[2].complex != c) return fail("expansion certifies a different complex");
        break;
    }
    case Kind::reduction:
    case Kind::dual:
    case Kind::permutation:
    case Kind::link_map:
    case Kind::contraction_map:
        if (!expect_children(1)) return;
        try {
            if (relabel(c, node.map) != node.children[0].complex) return fail("relabelled complex differs from child");
        }
        catch (const InvalidInput& e) {
            return fail(e.what());
        }
        break;
    }
    for (const auto& child : node.children) check_node(child, report);
}

std::string face_text(const Face& f)
{
    std::string s = "{";
    for (std::size_t k = 0; k < f.size(); ++k) s += (k ? " " : "") + f[k].str();
    return s + "}";
}

void write_text(const CertificateNode& node, int depth, std::ostringstream& out)
{
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    out << pad << kind_name(node.kind);
    if (!node.note.empty()) out << " [" << node.note << "]";
    if (node.edge) out << " contract " << node.edge->first.str() << " into " << node.edge->second.str();
    out << " facets=" << node.complex.facets().size() << " dim=" << node.complex.rank() - 1 << '\n';
    if (!node.map.empty()) {
        out << pad << "  map";
        for (const auto& [from, to] : node.map)
            if (from != to) out << ' ' << from.str() << "->" << to.str();
        out << '\n';
    }
    out << pad << "  ";
    for (std::size_t k = 0; k < node.complex.facets().size(); ++k)
        out << (k ? " " : "") << face_text(node.complex.facets()[k]);
    out << '\n';
    for (const auto& child : node.children) write_text(child, depth + 1, out);
}

nlohmann::json to_json(const CertificateNode& node)
{
    nlohmann::json j;
    j["kind"] = kind_name(node.kind);
    if (!node.note.empty()) j["note"] = node.note;
    auto facets = nlohmann::json::array();
    for (const auto& f : node.complex.facets()) {
        auto face = nlohmann::json::array();
        for (const auto& v : f) face.push_back(v.str());
        facets.push_back(std::move(face));
    }
    j["facets"] = std::move(facets);
    if (node.edge) j["edge"] = {{"removed", node.edge->first.str()}, {"kept", node.edge->second.str()}};
    if (!node.map.empty()) {
        auto pairs = nlohmann::json::array();
        for (const auto& [from, to] : node.map) pairs.push_back({from.str(), to.str()});
        j["map"] = std::move(pairs);
    }
    auto children = nlohmann::json::array();
    for (const auto& child : node.children) children.push_back(to_json(child));
    j["children"] = std::move(children);
    return j;
}

}  // namespace

CertificateReport verify_certificate(const CertificateNode& root)
{
    CertificateReport report;
    check_node(root, report);
    report.ok = report.failure.empty();
    return report;
}

std::string certificate_text(const CertificateNode& root)
{
    std::ostringstream out;
    write_text(root, 0, out);
    return out.str();
}

std::string certificate_json(const CertificateNode& root, int indent)
{
    return to_json(root).dump(indent);
}

// ---------------------------------------------------------------------------
// Generic search

namespace {

class Search {
public:
    explicit Search(std::uint64_t budget) : budget_(budget) {}

    std::uint64_t steps() const { return steps_; }

    Outcome run(const SimplicialComplex& c, std::optional<CertificateNode>& out)
    {
        if (++steps_ > budget_) return Outcome::unknown;
        if (is_base(c)) {
            out = leaf_for(c);
            return Outcome::yes;
        }
        if (c.is_void() || !c.is_pure()) return Outcome::no;
        if (const auto it = yes_.find(c.facets()); it != yes_.end()) {
            out = it->second;
            return Outcome::yes;
        }
        if (no_.count(c.facets())) return Outcome::no;

        bool undecided = false;
        const auto vs = c.vertices();
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b) {
                const Face e{vs[a], vs[b]};
                if (!c.contains(e) || !link_condition(c, vs[a], vs[b])) continue;
                std::optional<CertificateNode> lk, co;
                const auto rl = run(link(c, e), lk);
                if (rl != Outcome::yes) {
                    undecided |= rl == Outcome::unknown;
                    if (steps_ > budget_) return Outcome::unknown;
                    continue;
                }
                const auto rc = run(contraction(c, vs[b], vs[a]), co);
                if (rc != Outcome::yes) {
                    undecided |= rc == Outcome::unknown;
                    if (steps_ > budget_) return Outcome::unknown;
                    continue;
                }
                CertificateNode node;
                node.kind = Kind::edge;
                node.complex = c;
                node.edge = std::make_pair(vs[b], vs[a]);
                node.children = {std::move(*lk), std::move(*co)};
                yes_[c.facets()] = node;
                out = std::move(node);
                return Outcome::yes;
            }
        if (undecided) return Outcome::unknown;
        no_.insert(c.facets());
        return Outcome::no;
    }

private:
    std::uint64_t budget_;
    std::uint64_t steps_ = 0;
    std::map<std::vector<Face>, CertificateNode> yes_;
    std::set<std::vector<Face>> no_;
};

}  // namespace

SearchResult is_edge_decomposable(const SimplicialComplex& complex, std::uint64_t budget)
{
    if (!complex.is_pure()) throw InvalidInput("edge decomposability is defined for pure complexes");
    Search search(budget);
    SearchResult result;
    result.outcome = search.run(complex, result.certificate);
    result.steps = search.steps();
    return result;
}

// ---------------------------------------------------------------------------
// Bier steps

std::optional<Reduction> reduction_step(const Multicomplex& m)
{
    const std::size_t n = m.nvars();
    if (n < 2) throw InvalidInput("reduction needs at least two variables");
    if (m.is_full()) throw Undefined("reduction needs a proper multicomplex");
    const auto sphere = sphere_of(m);
    const Cap& c = m.cap();

    Reduction out{std::nullopt, {m, {}}};
    Multicomplex base = m;
    if (!has_vertex(sphere, level_vertex(n - 1, 0))) {
        // nothing to do before the reduction
    }
    else if (!has_vertex(sphere, level_vertex(n - 1, c[n - 1]))) {
        out.dual = BierStep{alexander_dual(m), dual_permutation(c)};
        require_equal(relabel(sphere, out.dual->map), sphere_of(out.dual->result),
                      "dual permutation does not carry Bier_c(M) to Bier_c(M^v)");
        base = out.dual->result;
    }
    else {
        return std::nullopt;
    }
    out.reduce = drop_last(base);
    require_equal(relabel(sphere_of(base), out.reduce.map), sphere_of(out.reduce.result),
                  "reduction relabelling does not give Bier_c'(M')");
    return out;
}

KeyLink keylemma_link(const Multicomplex& m)
{
    const std::size_t n = m.nvars();
    if (n < 2) throw InvalidInput("key lemma needs at least two variables");
    if (m.is_full()) throw Undefined("key lemma needs a proper multicomplex");
    const Cap& c = m.cap();
    const auto sphere = sphere_of(m);
    const auto top = level_vertex(0, c[0]), bottom = level_vertex(n - 1, 0);
    if (!has_vertex(sphere, top) || !has_vertex(sphere, bottom))
        throw InvalidInput("key lemma needs x_1^(c_1) and x_n^(0) as vertices");

    std::vector<int> lowered = c.entries();
    lowered[0] -= 1;
    const Cap c1(lowered);
    const auto restricted = restrict_to_cap(m, c1);
    require_equal(sphere_of(restricted), link(sphere, {top}), "Bier_c'(M') differs from the link of x_1^(c_1)");
    const auto dual = alexander_dual(restricted);
    lowered[n - 1] -= 1;
    const auto result = restrict_to_cap(dual, Cap(lowered));

    KeyLink out{restricted, dual, {result, dual_permutation(c1)}};
    require_equal(relabel(link(sphere, make_face({top, bottom})), out.step.map), sphere_of(result),
                  "link of {x_1^(c_1), x_n^(0)} is not carried to the lowered Bier sphere");
    return out;
}

BierStep keylemma_contraction(const Multicomplex& m)
{
    const std::size_t n = m.nvars();
    if (n < 2) throw InvalidInput("key lemma needs at least two variables");
    if (m.is_full()) throw Undefined("key lemma needs a proper multicomplex");
    const Cap& c = m.cap();
    const auto sphere = sphere_of(m);
    const auto top = level_vertex(0, c[0]), bottom = level_vertex(n - 1, 0);
    if (!has_vertex(sphere, top) || !has_vertex(sphere, bottom))
        throw InvalidInput("key lemma needs x_1^(c_1) and x_n^(0) as vertices");

    std::vector<int> merged(c.entries().begin(), c.entries().end() - 1);
    merged[0] += c[n - 1];
    std::set<Exponent> images;
    for (const auto& a : m.members()) {
        if (a[0] != c[0] && a[n - 1] != 0) continue;
        Exponent b(a.begin(), a.end() - 1);
        b[0] += a[n - 1];
        images.insert(std::move(b));
    }
    const auto result = Multicomplex::from_members(Cap(merged), {images.begin(), images.end()});
    if (result.is_full()) throw VerificationFailure("sigma(M) is c'-full");

    BierStep out{result, {}};
    for (int j = 1; j <= c[n - 1]; ++j) out.map[level_vertex(n - 1, j)] = level_vertex(0, c[0] + j);
    require_equal(relabel(contraction(sphere, bottom, top), out.map), sphere_of(result),
                  "rho does not carry the contraction to Bier_c'(sigma(M))");
    return out;
}

// ---------------------------------------------------------------------------
// Recursive construction

namespace {

// Certificate for the join of the boundaries of the simplices on f and g
// (disjoint), one Edge at a time.
CertificateNode join_expansion(const Face& f, const Face& g)
{
    const auto complex = join(simplex_boundary(f), simplex_boundary(g));
    if (f.size() <= 1 || g.size() <= 1) return leaf_for(complex);
    const Face f_rest(f.begin() + 1, f.end()), g_rest(g.begin() + 1, g.end());
    Face merged = f_rest;
    merged.insert(merged.end(), g.begin(), g.end());
    CertificateNode node;
    node.kind = Kind::edge;
    node.complex = complex;
    node.edge = std::make_pair(f.front(), g.front());
    node.children = {join_expansion(f_rest, g_rest), leaf_for(simplex_boundary(make_face(merged)))};
    return node;
}

CertificateNode wrap(Kind kind, SimplicialComplex complex, VertexMap map, CertificateNode child, std::string note = {})
{
    CertificateNode node;
    node.kind = kind;
    node.complex = std::move(complex);
    node.map = std::move(map);
    node.note = std::move(note);
    node.children.push_back(std::move(child));
    return node;
}

CertificateNode decompose(const Multicomplex& m, std::uint64_t budget)
{
    const auto sphere = sphere_of(m);
    const Cap& c = m.cap();
    const std::size_t n = m.nvars();
    if (is_base(sphere)) {
        auto node = leaf_for(sphere);
        node.note = bier_note(m);
        return node;
    }
    if (sphere.rank() - 1 <= 1) {
        auto found = is_edge_decomposable(sphere, budget);
        if (found.outcome != Outcome::yes)
            throw VerificationFailure("generic search did not decompose a Bier sphere of dimension <= 1");
        found.certificate->note = bier_note(m) + " by search";
        return std::move(*found.certificate);
    }

    // A variable with c_i = 0 carries no vertex; move it last so the
    // reduction removes it.
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (c[i] == 0) {
            auto step = swap_variables(m, i, n - 1);
            return wrap(Kind::permutation, sphere, std::move(step.map), decompose(step.result, budget), bier_note(m));
        }

    if (n == 1) {
        const int b = lcm_of(m)[0];
        Face low, high;
        for (int j = 0; j <= c[0]; ++j) (j <= b ? low : high).push_back(level_vertex(0, j));
        CertificateNode node;
        node.kind = Kind::join;
        node.complex = sphere;
        node.note = bier_note(m);
        node.children = {leaf_for(simplex_boundary(low)), leaf_for(simplex_boundary(high)), join_expansion(low, high)};
        return node;
    }

    if (auto red = reduction_step(m)) {
        auto reduced = wrap(Kind::reduction, sphere_of(red->dual ? red->dual->result : m), std::move(red->reduce.map),
                            decompose(red->reduce.result, budget));
        if (!red->dual) {
            reduced.note = bier_note(m);
            return reduced;
        }
        return wrap(Kind::dual, sphere, std::move(red->dual->map), std::move(reduced), bier_note(m));
    }

    if (!has_vertex(sphere, level_vertex(0, c[0]))) {
        auto step = swap_variables(m, 0, n - 1);
        return wrap(Kind::permutation, sphere, std::move(step.map), decompose(step.result, budget), bier_note(m));
    }

    const auto top = level_vertex(0, c[0]), bottom = level_vertex(n - 1, 0);
    if (!link_condition(sphere, top, bottom))
        throw VerificationFailure("Link condition fails on {x_1^(c_1), x_n^(0)}");
    auto lk = keylemma_link(m);
    auto co = keylemma_contraction(m);

    CertificateNode node;
    node.kind = Kind::edge;
    node.complex = sphere;
    node.note = bier_note(m);
    node.edge = std::make_pair(bottom, top);
    node.children = {
        wrap(Kind::link_map, link(sphere, make_face({top, bottom})), std::move(lk.step.map),
             decompose(lk.step.result, budget)),
        wrap(Kind::contraction_map, contraction(sphere, bottom, top), std::move(co.map), decompose(co.result, budget)),
    };
    return node;
}

}  // namespace

CertificateNode bier_decomposition(const Multicomplex& m, std::uint64_t budget)
{
    if (m.is_full()) throw Undefined("Bier sphere needs a proper multicomplex");
    return decompose(m, budget);
}

}  // namespace bier
