#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include <json.hpp>

#include "wdq/bench.hpp"
#include "wdq/errors.hpp"
#include "wdq/wdtree.hpp"

namespace wdq {
namespace {

const char* kVocabulary[] = {"workFor", "teachOf", "advisor", "takesCourse"};

/// AF leaf over the shared join variable ?x with a fresh object variable.
PatternPtr makeLeaf(int index, std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, std::size(kVocabulary) - 1);
    return Pattern::triple(Term::var("x"), Term::iri(kVocabulary[pick(rng)]),
                           Term::var("v" + std::to_string(index)));
}

/// Non-optional head: AND plus FILTER, answers are the professors.
PatternPtr makeHead() {
    auto body = Pattern::andOf(
        Pattern::triple(Term::var("x"), Term::iri("rdf:type"), Term::iri("professor")),
        Pattern::triple(Term::var("x"), Term::iri("workFor"), Term::var("u")));
    return Pattern::filter(body, Constraint::bound(Term::var("x")));
}

PatternPtr buildFull(int height, int& leafIndex, std::mt19937& rng) {
    if (height == 0) {
        if (leafIndex == 0) {
            ++leafIndex;
            return makeHead();
        }
        return makeLeaf(leafIndex++, rng);
    }
    auto l = buildFull(height - 1, leafIndex, rng);
    auto r = buildFull(height - 1, leafIndex, rng);
    return Pattern::opt(l, r);
}

/// Substitute the non-optional head for the leftmost leaf of an OPT tree.
PatternPtr replaceLeftmostLeaf(const PatternPtr& p, const PatternPtr& head) {
    if (p->kind != Pattern::Kind::Opt) return head;
    return Pattern::opt(p->optId, replaceLeftmostLeaf(p->left, head), p->right);
}

/// Zigzag path tree: OPT nodes o1..on where o_{i+1} hangs off o_i on the
/// side given by directions[i-1] (true = right), the other child a leaf.
/// The leftmost leaf of the result is the non-optional head.
PatternPtr buildZigzagPath(const std::vector<bool>& directions, std::mt19937& rng) {
    int leafIndex = 1;
    // Built from the bottom of the path upward.
    PatternPtr cur =
        Pattern::opt(makeLeaf(leafIndex++, rng), makeLeaf(leafIndex++, rng));
    for (auto it = directions.rbegin(); it != directions.rend(); ++it) {
        if (*it)
            cur = Pattern::opt(makeLeaf(leafIndex++, rng), cur);
        else
            cur = Pattern::opt(cur, makeLeaf(leafIndex++, rng));
    }
    return replaceLeftmostLeaf(cur, makeHead());
}

}  // namespace

std::string toString(TreeShape::Kind k) {
    switch (k) {
        case TreeShape::Kind::Zigzag: return "zigzag";
        case TreeShape::Kind::LeftDeep: return "left-deep";
        case TreeShape::Kind::RightDeep: return "right-deep";
        case TreeShape::Kind::Full: return "full";
    }
    return {};
}

std::optional<TreeShape::Kind> parseShapeKind(const std::string& name) {
    if (name == "zigzag") return TreeShape::Kind::Zigzag;
    if (name == "left-deep" || name == "leftdeep") return TreeShape::Kind::LeftDeep;
    if (name == "right-deep" || name == "rightdeep") return TreeShape::Kind::RightDeep;
    if (name == "full") return TreeShape::Kind::Full;
    return std::nullopt;
}

PatternPtr generateQuery(const TreeShape& shape, unsigned seed) {
    if (shape.optCount < 0) throw ShapeInfeasible("negative OPT count");
    std::mt19937 rng(seed);
    if (shape.optCount == 0) return assignOptIds(makeHead());

    PatternPtr result;
    switch (shape.kind) {
        case TreeShape::Kind::LeftDeep: {
            result = makeHead();
            for (int i = 1; i <= shape.optCount; ++i)
                result = Pattern::opt(result, makeLeaf(i, rng));
            break;
        }
        case TreeShape::Kind::RightDeep: {
            result = makeLeaf(shape.optCount, rng);
            for (int i = shape.optCount - 1; i >= 1; --i)
                result = Pattern::opt(makeLeaf(i, rng), result);
            result = Pattern::opt(makeHead(), result);
            break;
        }
        case TreeShape::Kind::Full: {
            int height = 0;
            while ((1 << (height + 1)) - 1 < shape.optCount) ++height;
            if ((1 << (height + 1)) - 1 != shape.optCount)
                throw ShapeInfeasible("full tree needs 2^h - 1 OPT nodes, got " +
                                      std::to_string(shape.optCount));
            int leafIndex = 0;
            result = buildFull(height + 1, leafIndex, rng);
            break;
        }
        case TreeShape::Kind::Zigzag: {
            // Alternate sides along the OPT path, starting with a right
            // extension below the root.
            std::vector<bool> directions;
            for (int i = 0; i < shape.optCount - 1; ++i) directions.push_back(i % 2 == 0);
            result = buildZigzagPath(directions, rng);
            break;
        }
    }
    return assignOptIds(result);
}

std::vector<std::pair<int, int>> optCountProfile(const PatternPtr& p, int kMax) {
    std::vector<std::pair<int, int>> profile;
    for (int k = 0; k <= kMax; ++k) profile.emplace_back(k, optCount(kApproximate(p, k)));
    return profile;
}

Graph generateGraph(int universities, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<Triple> triples;
    const int professorsPer = 5;
    const int studentsPer = 10;
    const int coursesPer = 4;

    auto iri = [](const std::string& s) { return Term::iri(s); };
    for (int u = 0; u < universities; ++u) {
        std::string univ = "University" + std::to_string(u);
        std::vector<std::string> professors;
        std::vector<std::string> courses;
        for (int c = 0; c < coursesPer; ++c)
            courses.push_back("Course" + std::to_string(u) + "_" + std::to_string(c));
        for (int p = 0; p < professorsPer; ++p) {
            std::string prof = "Professor" + std::to_string(u) + "_" + std::to_string(p);
            professors.push_back(prof);
            triples.push_back({iri(prof), iri("rdf:type"), iri("professor")});
            triples.push_back({iri(prof), iri("workFor"), iri(univ)});
        }
        std::uniform_int_distribution<std::size_t> pickProf(0, professors.size() - 1);
        std::uniform_int_distribution<std::size_t> pickCourse(0, courses.size() - 1);
        for (int s = 0; s < studentsPer; ++s) {
            std::string student = "Student" + std::to_string(u) + "_" + std::to_string(s);
            const std::string& advisor = professors[pickProf(rng)];
            triples.push_back({iri(student), iri("rdf:type"), iri("master")});
            triples.push_back({iri(student), iri("advisor"), iri(advisor)});
            triples.push_back({iri(advisor), iri("teachOf"), iri(student)});
            triples.push_back({iri(student), iri("takesCourse"), iri(courses[pickCourse(rng)])});
        }
    }
    return Graph::fromTriples(std::move(triples));
}

BenchReport runWorkload(const std::vector<NamedQuery>& queries, const Graph& graph,
                        const std::vector<int>& ks, int repeats,
                        const std::string& datasetName) {
    using Clock = std::chrono::steady_clock;
    BenchReport report;
    for (const auto& q : queries) {
        for (int k : ks) {
            BenchRow row{q.name, k, datasetName, 0.0, 0, 0, ""};
            try {
                PatternPtr approx = kApproximate(q.pattern, k);
                row.optCountAfter = optCount(approx);

                evaluate(approx, graph);  // warm-up, discarded
                std::vector<double> times;
                for (int r = 0; r < std::max(repeats, 1); ++r) {
                    auto start = Clock::now();
                    MappingSet answers = evaluate(approx, graph);
                    auto stop = Clock::now();
                    times.push_back(
                        std::chrono::duration<double, std::milli>(stop - start).count());
                    row.answers = answers.size();
                }
                std::sort(times.begin(), times.end());
                row.medianMs = times[times.size() / 2];
            } catch (const std::exception& e) {
                row.error = e.what();
            }
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

std::string BenchReport::toCsv() const {
    std::ostringstream out;
    out << "query,k,dataset,median_ms,answers,opt_count,error\n";
    for (const auto& r : rows) {
        out << r.query << ',' << r.k << ',' << r.dataset << ',' << r.medianMs << ',' << r.answers
            << ',' << r.optCountAfter << ',' << r.error << '\n';
    }
    return out.str();
}

std::string BenchReport::toJson() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json row{{"query", r.query},        {"k", r.k},
                           {"dataset", r.dataset},    {"median_ms", r.medianMs},
                           {"answers", r.answers},    {"opt_count", r.optCountAfter}};
        if (!r.error.empty()) row["error"] = r.error;
        arr.push_back(std::move(row));
    }
    return arr.dump(2);
}

std::optional<PatternPtr> searchZigzagProfile(int optCount, const std::vector<int>& profile,
                                              unsigned seed) {
    if (optCount < 2) return std::nullopt;
    std::mt19937 rng(seed);
    int pathSteps = optCount - 1;
    for (unsigned mask = 0; mask < (1u << pathSteps); ++mask) {
        std::vector<bool> directions;
        for (int i = 0; i < pathSteps; ++i) directions.push_back((mask >> i) & 1u);
        PatternPtr candidate = assignOptIds(buildZigzagPath(directions, rng));
        bool match = true;
        for (std::size_t k = 0; k < profile.size(); ++k) {
            if (wdq::optCount(kApproximate(candidate, static_cast<int>(k))) != profile[k]) {
                match = false;
                break;
            }
        }
        if (match) return candidate;
    }
    return std::nullopt;
}

}  // namespace wdq
