#include "doctest.h"

#include "conjectures/canonical.hpp"
#include "conjectures/error.hpp"
#include "conjectures/interpretation.hpp"
#include "conjectures/parse.hpp"
#include "conjectures/satisfaction.hpp"

#include <algorithm>
#include <filesystem>
#include <random>

using namespace conjectures;

namespace {

std::string corpus(const std::string& rel) {
    return std::string(CORPUS_DIR) + "/" + rel;
}

Term iri(const std::string& s) { return Term::iri(s); }

struct Golden {
    Dataset d;
    Interpretation i;
};

Golden load(const std::string& data, const std::string& interp) {
    Dataset d = parse_file(corpus(data));
    Interpretation i = parse_interp_file(corpus(interp), d.prefixes);
    return {std::move(d), std::move(i)};
}

int count_clause(const Verdict& v, const std::string& clause, bool ok) {
    int n = 0;
    for (const auto& e : v.trace)
        if (e.clause == clause && e.ok == ok) ++n;
    return n;
}

} // namespace

TEST_CASE("denote routes literals, IRIs and blank nodes") {
    auto [d, i] = load("authorship/devere.trigc", "interp/devere.interp");
    CHECK(denote(iri("http://example.org/doc#Hamlet"), i) == "h");
    CHECK_THROWS_AS(denote(iri("http://example.org/doc#Unknown"), i),
                    ConjError);
    BlankNodeAssignment a;
    a.mapping["z"] = "e";
    CHECK(denote(Term::blank("z"), i, &a) == "e");
    CHECK_THROWS_AS(denote(Term::blank("w"), i, &a), ConjError);
    CHECK_THROWS_AS(denote(Term::blank("z"), i, nullptr), ConjError);
    CHECK_THROWS_AS(denote(Term::literal("nope"), i), ConjError);
}

TEST_CASE("triple clauses follow the extended interpretation") {
    auto [d, i] = load("authorship/devere.trigc", "interp/devere.interp");

    // the conjecture triple holds
    Verdict conj = satisfies_triple(
        Triple(iri("http://example.org/doc#Hamlet"),
               iri("http://example.org/conj/001#creator"),
               iri("http://example.org/doc#EdwardDeVere")),
        i);
    CHECK(conj.value);
    CHECK(conj.trace[0].clause == "conjectural");

    // the effective triple does not: IEXT(c) is empty
    Verdict plain = satisfies_triple(
        Triple(iri("http://example.org/doc#Hamlet"),
               iri("http://purl.org/dc/elements/1.1/creator"),
               iri("http://example.org/doc#EdwardDeVere")),
        i);
    CHECK_FALSE(plain.value);
    CHECK(plain.trace[0].clause == "plain");

    // a predicate denoting neither a property nor a conjectural property
    Verdict neither = satisfies_triple(
        Triple(iri("http://example.org/doc#Hamlet"),
               iri("http://example.org/doc#EdwardDeVere"),
               iri("http://example.org/doc#Hamlet")),
        i);
    CHECK_FALSE(neither.value);
    CHECK(neither.trace[0].clause == "predicate-not-a-property");

    // conjectural clause without a CONJFORM entry: strict fails,
    // lenient passes
    Interpretation stripped = i;
    stripped.conjform.clear();
    Triple ct(iri("http://example.org/doc#Hamlet"),
              iri("http://example.org/conj/001#creator"),
              iri("http://example.org/doc#EdwardDeVere"));
    CHECK_FALSE(satisfies_triple(ct, stripped).value);
    SatisfyOptions lenient;
    lenient.require_conjform = false;
    CHECK(satisfies_triple(ct, stripped, nullptr, lenient).value);
}

TEST_CASE("the devere interpretation is a model of its dataset") {
    auto [d, i] = load("authorship/devere.trigc", "interp/devere.interp");
    CHECK(satisfies_dataset(d, i).value);
}

TEST_CASE("blank node search finds the zz witness in the othello graph") {
    auto [d, i] = load("authorship/othello.trigc", "interp/othello.interp");
    const NamedGraph* g =
        d.find_graph(graph_name("http://example.org/doc#ArabWroteOthello"));
    REQUIRE(g);
    CHECK(i.resource_order.size() == 8);

    Verdict v = satisfies_graph(*g, i);
    CHECK(v.value);
    bool witness = false;
    for (const auto& e : v.trace)
        if (e.clause == "blank-assignment" && e.ok &&
            e.subject.find("A(_:z) = zz") != std::string::npos)
            witness = true;
    CHECK(witness);

    // removing <zz,a> from IEXT(n) defeats all 8 assignments
    Interpretation broken = i;
    broken.iext["n"].clear();
    Verdict bad = satisfies_graph(*g, broken);
    CHECK_FALSE(bad.value);
}

TEST_CASE("empty graph is vacuously satisfied") {
    auto [d, i] = load("authorship/devere.trigc", "interp/devere.interp");
    NamedGraph g{graph_name("http://x/empty"), GraphKind::Plain, {}, {}};
    CHECK(satisfies_graph(g, i).value);
}

TEST_CASE("blank-node search respects the assignment cap") {
    auto [d, i] = load("authorship/othello.trigc", "interp/othello.interp");
    NamedGraph g{graph_name("http://x/blanks"), GraphKind::Plain, {}, {}};
    // three blanks over 8 resources: 512 candidates
    g.add(Triple(Term::blank("a"), iri("http://x/p"), Term::blank("b")));
    g.add(Triple(Term::blank("b"), iri("http://x/p"), Term::blank("c")));
    SatisfyOptions tight;
    tight.max_assignments = 100;
    try {
        satisfies_graph(g, i, tight);
        FAIL("expected Exhaustion");
    } catch (const ConjError& e) {
        CHECK(e.code() == Errc::Exhaustion);
    }
}

TEST_CASE("the six collapse checks hold for attr1 and each is falsifiable") {
    auto [d, i] = load("authorship/attr1.trigc", "interp/attr1.interp");
    GraphName conj = graph_name("http://example.org/doc#attr1");
    GraphName cot = graph_name("http://example.org/doc#attr1Cot");

    Verdict v = satisfies_collapse(conj, cot, d, i);
    CHECK(v.value);
    REQUIRE(v.trace.size() == 6);
    for (const auto& e : v.trace) CHECK(e.ok);

    auto failing = [&](const Interpretation& mut, const char* clause) {
        Verdict m = satisfies_collapse(conj, cot, d, mut);
        CHECK_FALSE(m.value);
        CHECK(count_clause(m, clause, false) >= 1);
    };

    // 1: cc3 out of IPC (and out of everything keyed by it)
    {
        Interpretation m = i;
        m.ipc.erase("cc3");
        m.iextc.erase("cc3");
        m.conjform["c"].erase("cc3");
        failing(m, "collapse.cp-in-ipc");
    }
    // 2: c out of IP
    {
        Interpretation m = i;
        m.ip.erase("c");
        m.iext.erase("c");
        m.conjform.erase("c");
        failing(m, "collapse.p-in-ip");
    }
    // 3: CONJFORM(c) no longer contains cc3
    {
        Interpretation m = i;
        m.conjform["c"].erase("cc3");
        failing(m, "collapse.conjform");
    }
    // 4: IEXTC(cc3) points at a different pair
    {
        Interpretation m = i;
        m.iextc["cc3"] = {"h", "a1"};
        failing(m, "collapse.pair-in-iextc");
    }
    // 5: the pair leaves IEXT(c)
    {
        Interpretation m = i;
        m.iext["c"].clear();
        failing(m, "collapse.pair-in-iext");
    }
    // 6: the collapses relation (via CONJFORM and IEXTC together)
    {
        Interpretation m = i;
        m.conjform["c"].erase("cc3");
        failing(m, "collapse.collapses-relation");
    }

    // the whole dataset is also satisfied
    CHECK(satisfies_dataset(d, i).value);
}

TEST_CASE("satisfies_collapse preconditions") {
    auto [d, i] = load("authorship/attr1.trigc", "interp/attr1.interp");
    CHECK_THROWS_AS(satisfies_collapse(graph_name("http://x/none"),
                                       graph_name("http://example.org/doc#attr1Cot"),
                                       d, i),
                    ConjError);
    CHECK_THROWS_AS(
        satisfies_collapse(graph_name("http://example.org/doc#attr1"),
                           graph_name("http://x/none"), d, i),
        ConjError);
}

TEST_CASE("nested conjectures evaluate bottom-up, c1 c2 c3 all true") {
    auto [d, i] = load("authorship/nested.trigc", "interp/nested.interp");
    auto verdicts = evaluate_nested(d, i);
    REQUIRE(verdicts.size() == 3);
    CHECK(verdicts[0].first.iri == "http://example.org/doc#conjecture01");
    CHECK(verdicts[1].first.iri == "http://example.org/doc#conjecture02");
    CHECK(verdicts[2].first.iri == "http://example.org/doc#conjecture03");
    for (const auto& [name, v] : verdicts) CHECK(v.value);

    // clause labels follow the nesting cases
    CHECK(count_clause(verdicts[0].second, "nested.base", true) == 1);
    CHECK(count_clause(verdicts[1].second, "nested.case-s", true) == 1);
    CHECK(count_clause(verdicts[2].second, "nested.case-s", true) == 1);

    // breaking IEXTC(cwa4) falsifies c2 and c3 but not c1
    Interpretation m = i;
    m.iextc["cwa4"] = {"c1", "fv"};
    auto broken = evaluate_nested(d, m);
    CHECK(broken[0].second.value);
    CHECK_FALSE(broken[1].second.value);
    CHECK_FALSE(broken[2].second.value);

    // the full dataset is satisfied too (ground triple included)
    CHECK(satisfies_dataset(d, i).value);
}

TEST_CASE("nested case O and case SO") {
    Dataset d = parse_file(corpus("synthetic/s16_nested_case_so.trigc"));
    Interpretation i = canonical_interpretation(d);
    auto verdicts = evaluate_nested(d, i);
    REQUIRE(verdicts.size() == 3);
    // bridge evaluates last; both inner conjectures first
    CHECK(verdicts[2].first.iri == "http://example.org/x#bridge");
    for (const auto& [name, v] : verdicts) CHECK(v.value);
    CHECK(count_clause(verdicts[2].second, "nested.case-so", true) == 1);

    Dataset o = parse_file(corpus("synthetic/s15_nested_case_o.trigc"));
    Interpretation io = canonical_interpretation(o);
    auto vo = evaluate_nested(o, io);
    REQUIRE(vo.size() == 2);
    CHECK(count_clause(vo[1].second, "nested.case-o", true) == 1);
    for (const auto& [name, v] : vo) CHECK(v.value);

    // breaking the left inner conjecture breaks the bridge
    Interpretation m = i;
    const Resource left_cp =
        m.is_map.at("http://example.org/cp/1#knows");
    m.iextc[left_cp] = {m.is_map.at("http://example.org/x#bob"),
                        m.is_map.at("http://example.org/x#bob")};
    auto broken = evaluate_nested(d, m);
    CHECK_FALSE(broken[0].second.value); // ex:left
    CHECK(broken[1].second.value);       // ex:right unaffected
    CHECK_FALSE(broken[2].second.value); // bridge depends on left
}

TEST_CASE("cyclic nesting is reported") {
    Dataset d = parse(
        "@prefix ex: <http://x/> .\n"
        "@prefix cp1: <http://x/cp1#> .\n"
        "@prefix cp2: <http://x/cp2#> .\n"
        "ex:g1 {\n"
        "    ex:g2 cp1:p ex:a .\n"
        "    cp1:p conj:isAConjecturalFormOf ex:p .\n"
        "}\n"
        "ex:g2 {\n"
        "    ex:g1 cp2:p ex:b .\n"
        "    cp2:p conj:isAConjecturalFormOf ex:p .\n"
        "}\n");
    Interpretation i = canonical_interpretation(d);
    try {
        evaluate_nested(d, i);
        FAIL("expected CyclicNesting");
    } catch (const ConjError& e) {
        CHECK(e.code() == Errc::CyclicNesting);
    }
}

TEST_CASE("the cascading-collapse interpretation is a model") {
    auto [d, i] = load("authorship/cascade_final.trigc", "interp/cascade.interp");
    Verdict v = satisfies_cascade(d, i);
    CHECK(v.value);
    CHECK(count_clause(v, "cascade.triple-object", true) == 1);
    CHECK(count_clause(v, "cascade.graph-object", true) == 2);
    CHECK(count_clause(v, "cascade.collapses-pair", true) == 2);

    // whole dataset
    CHECK(satisfies_dataset(d, i).value);

    // removing the outer collapses pair from IEXT(cl) breaks it
    Interpretation m = i;
    m.iext["cl"].erase({"ccoa1", "coa1"});
    CHECK_FALSE(satisfies_cascade(d, m).value);
    CHECK_FALSE(satisfies_dataset(d, m).value);
}

TEST_CASE("cascade conditions are vacuous without collapse graphs") {
    auto [d, i] = load("authorship/devere.trigc", "interp/devere.interp");
    Verdict v = satisfies_cascade(d, i);
    CHECK(v.value);
}

TEST_CASE("canonical interpretation of devere matches the hand model") {
    Dataset d = parse_file(corpus("authorship/devere.trigc"));
    Interpretation i = canonical_interpretation(d);
    const Resource cc1 = i.is_map.at("http://example.org/conj/001#creator");
    const Resource c = i.is_map.at("http://purl.org/dc/elements/1.1/creator");
    const Resource h = i.is_map.at("http://example.org/doc#Hamlet");
    const Resource e = i.is_map.at("http://example.org/doc#EdwardDeVere");
    CHECK(i.ipc == std::set<Resource>{cc1});
    CHECK(i.iextc.at(cc1) == ResourcePair{h, e});
    CHECK(i.conjform.at(c).count(cc1) == 1);
    CHECK(i.iext.at(c).empty());
    CHECK(satisfies_dataset(d, i).value);
}

TEST_CASE("canonical interpretation of the empty dataset is minimal") {
    Dataset d;
    Interpretation i = canonical_interpretation(d);
    CHECK(i.ir.size() == 1);
    CHECK(i.ip.empty());
    CHECK(i.ipc.empty());
    CHECK(satisfies_dataset(d, i).value);
}

TEST_CASE("canonical interpretation satisfies the attr1 collapse checks") {
    Dataset d = parse_file(corpus("authorship/attr1.trigc"));
    Interpretation i = canonical_interpretation(d);
    Verdict v = satisfies_collapse(graph_name("http://example.org/doc#attr1"),
                                   graph_name("http://example.org/doc#attr1Cot"),
                                   d, i);
    CHECK(v.value);
    REQUIRE(v.trace.size() == 6);
    for (const auto& e : v.trace) CHECK(e.ok);
}

TEST_CASE("model soundness over the whole corpus") {
    for (const char* sub : {"authorship", "synthetic"}) {
        for (const auto& entry :
             std::filesystem::directory_iterator(corpus(sub))) {
            if (entry.path().extension() != ".trigc") continue;
            CAPTURE(entry.path().string());
            Dataset d = parse_file(entry.path().string());
            Interpretation i = canonical_interpretation(d);
            CHECK(satisfies_dataset(d, i).value);
        }
    }
}

TEST_CASE("blank-node search agrees with independent full enumeration") {
    // Random small interpretations over <= 6 resources, graphs with
    // <= 2 blank nodes; the oracle enumerates assignments by hand and
    // judges each triple individually.
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> nres(2, 6), coin(0, 1), pick(0, 5);

    for (int round = 0; round < 300; ++round) {
        Interpretation i;
        const int n = nres(rng);
        for (int r = 0; r < n; ++r) i.add_resource("r" + std::to_string(r));
        auto res = [&] { return "r" + std::to_string(pick(rng) % n); };

        // two properties with random extensions, one conjectural property
        i.ip = {"r0"};
        if (n > 1 && coin(rng)) i.ip.insert("r1");
        for (const auto& p : i.ip) {
            auto& ext = i.iext[p];
            int pairs = pick(rng) % 4;
            for (int k = 0; k < pairs; ++k) ext.insert(ResourcePair{res(), res()});
        }
        std::string cp = "r" + std::to_string(n - 1);
        if (!i.ip.count(cp)) {
            i.ipc.insert(cp);
            i.iextc[cp] = ResourcePair{res(), res()};
            i.conjform[*i.ip.begin()].insert(cp);
        }

        // vocabulary: two IRIs per property plus nodes
        std::vector<std::string> preds;
        for (const auto& p : i.ip) {
            std::string iri_s = "http://x/p_" + p;
            i.is_map[iri_s] = p;
            preds.push_back(iri_s);
        }
        if (!i.ipc.empty()) {
            i.is_map["http://x/cp"] = *i.ipc.begin();
            preds.push_back("http://x/cp");
        }
        i.is_map["http://x/n0"] = "r0";
        i.is_map["http://x/n1"] = "r" + std::to_string((n - 1) % n);
        check_interpretation(i);

        // random graph with one or two blanks
        NamedGraph g{graph_name("http://x/g"), GraphKind::Plain, {}, {}};
        const int nblanks = 1 + coin(rng);
        const int ntriples = 1 + pick(rng) % 3;
        for (int k = 0; k < ntriples; ++k) {
            Term s = coin(rng) ? Term::blank("b0")
                               : iri("http://x/n" + std::to_string(coin(rng)));
            Term o = coin(rng) ? Term::blank(nblanks == 2 ? "b1" : "b0")
                               : iri("http://x/n" + std::to_string(coin(rng)));
            g.add(Triple(s, iri(preds[pick(rng) % preds.size()]), o));
        }

        // independent enumeration
        std::vector<std::string> labels;
        for (const auto& t : g.triples) {
            if (t.subject().is_blank()) labels.push_back(t.subject().value());
            if (t.object().is_blank()) labels.push_back(t.object().value());
        }
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

        bool expected = false;
        std::vector<int> idx(labels.size(), 0);
        for (;;) {
            BlankNodeAssignment a;
            for (std::size_t k = 0; k < labels.size(); ++k)
                a.mapping[labels[k]] = i.resource_order[idx[k]];
            bool all = true;
            for (const auto& t : g.triples)
                if (!satisfies_triple(t, i, &a).value) all = false;
            if (all) {
                expected = true;
                break;
            }
            std::size_t k = 0;
            for (; k < idx.size(); ++k) {
                if (++idx[k] < n) break;
                idx[k] = 0;
            }
            if (k == idx.size() || idx.empty()) break;
        }

        CAPTURE(round);
        CHECK(satisfies_graph(g, i).value == expected);
    }
}

TEST_CASE("verdicts are invariant under blank and minted-predicate renaming") {
    Dataset d = parse_file(corpus("authorship/othello.trigc"));
    Interpretation i = canonical_interpretation(d);
    REQUIRE(satisfies_dataset(d, i).value);

    // rename the blank node and the minted predicate consistently in the
    // dataset and in IS
    const std::string old_cp = "http://example.org/conj/002#creator";
    const std::string new_cp = "http://example.org/conj/renamed#creator";
    Dataset renamed = d;
    for (auto& g : renamed.named_graphs)
        for (auto& t : g.triples) {
            auto fix = [&](const Term& x) {
                if (x.is_blank()) return Term::blank("w");
                if (x.is_iri(old_cp)) return Term::iri(new_cp);
                return x;
            };
            t = Triple(fix(t.subject()), fix(t.predicate()), fix(t.object()));
        }
    Interpretation j = i;
    auto node = j.is_map.extract(old_cp);
    node.key() = new_cp;
    j.is_map.insert(std::move(node));

    CHECK(satisfies_dataset(renamed, j).value);
}
