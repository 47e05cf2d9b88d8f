// kqsym: command-line front end for the k-bounded quasi-symmetric and
// non-commutative Schur bases.
//
//   kqsym matrix --kind ns-to-h --k 2 --n 4 --format csv
//   kqsym kostka --family composition --shape 1,3,1,1 --content 1,1,2,1,1 --k 3 --order paper
//   kqsym expand 'S:[1,1,1]@k=3' --to H
//   kqsym verify --suite duality --max-n 7 --k 2,3,4
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain
// violation (an index that is not k-bounded).

#include "kqsym/disk_cache.hpp"
#include "kqsym/kqsym.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace kqsym;
using json = nlohmann::ordered_json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Caches {
    SchurCache compositions;
    KSchurCache partitions;
};

std::vector<int> parse_k_list(const std::string& text) {
    std::vector<int> ks;
    for (int k : parse_parts(text))
        ks.push_back(k);
    if (ks.empty())
        throw UsageError("--k needs at least one value");
    return ks;
}

// ---------------------------------------------------------------------------
// matrix

struct MatrixOptions {
    std::string kind;
    std::string k;
    int n = 0;
    std::string format = "json";
    bool no_cache = false;
    std::string cache_dir;
};

int run_matrix(const MatrixOptions& opt, Caches& caches) {
    const auto kind = parse_matrix_kind(opt.kind);
    if (!kind)
        throw UsageError("unknown --kind " + opt.kind);
    if (opt.n < 0)
        throw UsageError("--n must be nonnegative");
    const Bound k = parse_bound(opt.k);

    std::optional<DiskCache> disk;
    if (!opt.no_cache)
        disk.emplace(opt.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(opt.cache_dir));

    std::optional<MatrixDocument> doc;
    if (disk)
        doc = disk->load(*kind, k, opt.n);
    if (!doc) {
        doc = make_document(*kind, opt.n, k, caches.compositions, caches.partitions);
        if (disk)
            disk->store(*doc);
    }

    if (opt.format == "json")
        std::cout << to_json(*doc);
    else if (opt.format == "csv")
        std::cout << to_csv(*doc);
    else if (opt.format == "latex")
        std::cout << to_latex(*doc);
    else
        throw UsageError("unknown --format " + opt.format);
    return 0;
}

// ---------------------------------------------------------------------------
// kostka

struct KostkaOptions {
    std::string family = "composition";
    std::string shape;
    std::string content;
    std::string k = "inf";
    std::string order = "pieri";
};

int run_kostka(const KostkaOptions& opt) {
    const Bound k = parse_bound(opt.k);
    ContentOrder order;
    if (opt.order == "paper")
        order = ContentOrder::paper;
    else if (opt.order == "pieri")
        order = ContentOrder::pieri;
    else
        throw UsageError("--order must be paper or pieri");

    const Composition content(parse_parts(opt.content));
    const std::vector<int> shape = parse_parts(opt.shape);
    if (std::accumulate(shape.begin(), shape.end(), 0) != content.size())
        throw UsageError("shape and content have different sizes");

    Integer value;
    if (opt.family == "composition")
        value = kostka(Composition(shape), content, k, order);
    else if (opt.family == "partition")
        value = kostka(Partition(shape), content, k, order);
    else
        throw UsageError("--family must be partition or composition");
    std::cout << value << '\n';
    return 0;
}

// ---------------------------------------------------------------------------
// expand

BasisKind default_target(BasisKind kind) {
    switch (kind) {
    case BasisKind::S: return BasisKind::H;
    case BasisKind::H: return BasisKind::S;
    case BasisKind::QS: return BasisKind::M;
    case BasisKind::M: return BasisKind::QS;
    case BasisKind::s: return BasisKind::h;
    case BasisKind::h: return BasisKind::s;
    case BasisKind::dual_s: return BasisKind::m;
    case BasisKind::m: return BasisKind::dual_s;
    }
    return kind;
}

template <class Index, class Cache>
int print_expansion(const ElementSpec& spec, Bound k, BasisKind target, Cache& cache) {
    const Index index(spec.parts);
    if (!index.is_bounded(k))
        throw DomainError(std::string(kind_name(spec.kind)) + label_text(index) + " is not " + k.to_string() +
                          "-bounded");
    const auto x = LinearCombination<Index>::term(spec.kind, index, k);
    LinearCombination<Index> result(target, k);
    try {
        result = convert(x, target, cache);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (result.is_zero())
        std::cout << "0\n";
    for (const auto& [label, coeff] : result.terms())
        std::cout << coeff << '*' << kind_name(target) << label_text(label) << '\n';
    return 0;
}

int run_expand(const std::string& element, const std::string& to, const std::string& k_text, Caches& caches) {
    ElementSpec spec;
    try {
        spec = parse_element(element);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (!spec.k && k_text.empty())
        throw UsageError("give k either as @k=K in the element or with --k");
    if (spec.k && !k_text.empty() && *spec.k != parse_bound(k_text))
        throw UsageError("conflicting values of k");
    const Bound k = spec.k ? *spec.k : parse_bound(k_text);

    BasisKind target = default_target(spec.kind);
    if (!to.empty()) {
        const auto parsed = parse_kind(to);
        if (!parsed)
            throw UsageError("unknown target basis " + to);
        target = *parsed;
    }
    if (is_composition_kind(spec.kind) != is_composition_kind(target))
        throw UsageError("source and target bases index different objects");

    if (is_composition_kind(spec.kind))
        return print_expansion<Composition>(spec, k, target, caches.compositions);
    return print_expansion<Partition>(spec, k, target, caches.partitions);
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
    std::string suite;
    std::optional<int> max_n;
    std::string k;
    int max_witnesses = 10;
};

json case_json(const CaseResult& c) {
    json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    if (!c.detail.empty())
        j["detail"] = c.detail;
    return j;
}

std::string str(const Composition& c) { return label_text(c); }

int run_verify(const VerifyOptions& opt, Caches& caches) {
    struct Defaults {
        int max_n;
        std::vector<int> ks;
    };
    const std::map<std::string, Defaults> defaults = {
        {"appendix", {4, {2, 3}}},   {"duality", {7, {2, 3, 4}}},       {"projection", {6, {2, 3}}},
        {"decomposition", {6, {2, 3}}}, {"stabilization", {6, {}}},      {"omega", {10, {1, 2, 3, 4, 5}}},
        {"negativity", {8, {2, 3}}},
    };
    const auto it = defaults.find(opt.suite);
    if (it == defaults.end())
        throw UsageError("unknown --suite " + opt.suite);
    const int max_n = opt.max_n.value_or(it->second.max_n);
    const std::vector<int> ks = opt.k.empty() ? it->second.ks : parse_k_list(opt.k);
    if (max_n < 0)
        throw UsageError("--max-n must be nonnegative");

    Report report{opt.suite, {}};
    json witnesses = json::object();
    const std::string& suite = opt.suite;
    if (suite == "appendix") {
        report = verify_appendix(caches.compositions);
    } else if (suite == "duality") {
        for (int k : ks)
            for (int n = 0; n <= max_n; ++n)
                report.append(verify_duality(n, k, caches.compositions));
    } else if (suite == "projection" || suite == "decomposition") {
        for (int k : ks)
            for (int n = 0; n <= max_n; ++n)
                report.append(suite == "projection" ? verify_projection(n, k, caches.compositions, caches.partitions)
                                                    : verify_decomposition(n, k, caches.compositions, caches.partitions));
    } else if (suite == "stabilization") {
        for (int n = 0; n <= max_n; ++n)
            report.append(stabilization_check(n, caches.compositions, caches.partitions));
    } else if (suite == "omega") {
        for (int k : ks)
            for (int n = 0; n <= max_n; ++n)
                report.append(verify_omega(n, k));
    } else if (suite == "negativity") {
        if (max_n < 2)
            throw UsageError("negativity needs --max-n of at least 2");
        for (int k : ks) {
            const auto found = negativity_search(max_n, k, caches.compositions);
            const std::string tag = "k=" + std::to_string(k);
            report.cases.push_back({"negative structure constant " + tag, !found.products.empty(),
                                    found.products.empty() ? "no negative product coefficient found" : ""});
            report.cases.push_back({"negative classical expansion " + tag, !found.expansions.empty(),
                                    found.expansions.empty() ? "no negative expansion coefficient found" : ""});
            json w;
            w["products_total"] = found.products.size();
            w["products"] = json::array();
            for (std::size_t i = 0; i < found.products.size() && static_cast<int>(i) < opt.max_witnesses; ++i) {
                const auto& p = found.products[i];
                w["products"].push_back({{"left", str(p.left)},
                                         {"right", str(p.right)},
                                         {"term", str(p.term)},
                                         {"coefficient", p.coefficient.str()}});
            }
            w["expansions_total"] = found.expansions.size();
            w["expansions"] = json::array();
            for (std::size_t i = 0; i < found.expansions.size() && static_cast<int>(i) < opt.max_witnesses; ++i) {
                const auto& e = found.expansions[i];
                w["expansions"].push_back(
                    {{"alpha", str(e.alpha)}, {"classical", str(e.classical)}, {"coefficient", e.coefficient.str()}});
            }
            witnesses[tag] = std::move(w);
        }
    }

    json out;
    out["suite"] = suite;
    out["parameters"] = {{"max_n", suite == "appendix" ? 4 : max_n},
                         {"k", suite == "appendix" ? std::vector<int>{2, 3} : ks}};
    out["status"] = report.passed() ? "pass" : "fail";
    out["cases_total"] = report.cases.size();
    out["failures"] = report.failures();
    out["cases"] = json::array();
    for (const auto& c : report.cases)
        out["cases"].push_back(case_json(c));
    if (!witnesses.empty())
        out["witnesses"] = std::move(witnesses);
    std::cout << out.dump(2) << '\n';
    return report.passed() ? 0 : kExitFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact k-bounded quasi-symmetric and non-commutative Schur bases"};
    app.require_subcommand(1);
    Caches caches;

    MatrixOptions matrix;
    auto* matrix_cmd = app.add_subcommand("matrix", "Print a change-of-basis matrix for one graded component");
    matrix_cmd->add_option("--kind", matrix.kind, "ns-to-h, qs-to-m, kschur-to-h, dualkschur-to-m, h-to-ns, m-to-qs")
        ->required();
    matrix_cmd->add_option("--k", matrix.k, "Bound on parts, or inf")->required();
    matrix_cmd->add_option("--n", matrix.n, "Degree")->required();
    matrix_cmd->add_option("--format", matrix.format, "json, csv or latex")->capture_default_str();
    matrix_cmd->add_flag("--no-cache", matrix.no_cache, "Skip the on-disk cache");
    matrix_cmd->add_option("--cache-dir", matrix.cache_dir,
                           std::string("Cache directory (default: $") + kCacheDirVariable + ")");

    KostkaOptions kostka_opt;
    auto* kostka_cmd = app.add_subcommand("kostka", "Count strip chains (semistandard tableaux)");
    kostka_cmd->add_option("--family", kostka_opt.family, "partition or composition")->capture_default_str();
    kostka_cmd->add_option("--shape", kostka_opt.shape, "Comma-separated parts")->required();
    kostka_cmd->add_option("--content", kostka_opt.content, "Comma-separated parts")->required();
    kostka_cmd->add_option("--k", kostka_opt.k, "Bound on parts, or inf")->capture_default_str();
    kostka_cmd->add_option("--order", kostka_opt.order, "paper or pieri")->capture_default_str();

    std::string element;
    std::string expand_to;
    std::string expand_k;
    auto* expand_cmd = app.add_subcommand("expand", "Expand one basis element in another basis");
    expand_cmd->add_option("element", element, "KIND:INDEX[@k=K], e.g. S:[1,1,1]@k=3")->required();
    expand_cmd->add_option("--to", expand_to, "Target basis (default: the paired basis)");
    expand_cmd->add_option("--k", expand_k, "Bound on parts when the element has no @k=");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite and print a json report");
    verify_cmd
        ->add_option("--suite", verify.suite,
                     "appendix, duality, projection, decomposition, stabilization, omega, negativity")
        ->required();
    verify_cmd->add_option("--max-n", verify.max_n, "Largest degree (total degree for negativity)");
    verify_cmd->add_option("--k", verify.k, "Comma-separated list of k");
    verify_cmd->add_option("--max-witnesses", verify.max_witnesses, "Witnesses printed per search")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*matrix_cmd)
            return run_matrix(matrix, caches);
        if (*kostka_cmd)
            return run_kostka(kostka_opt);
        if (*expand_cmd)
            return run_expand(element, expand_to, expand_k, caches);
        if (*verify_cmd)
            return run_verify(verify, caches);
    } catch (const DomainError& e) {
        std::cerr << "kqsym: " << e.what() << '\n';
        return kExitDomain;
    } catch (const UsageError& e) {
        std::cerr << "kqsym: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "kqsym: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "kqsym: internal error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
