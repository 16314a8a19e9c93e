#include "springer/cli.hpp"

#include "springer/correspondence.hpp"
#include "springer/counting.hpp"
#include "springer/dims.hpp"
#include "springer/matrix_oracle.hpp"
#include "springer/restriction.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <sstream>

namespace springer::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kGrammar =
    "Label grammar:\n"
    "  pair    := orbit \";\" signs\n"
    "  orbit   := \"[\" parts? \"]\" split?\n"
    "  parts   := int (\",\" int)*      weakly decreasing positive integers\n"
    "  split   := \"+\" | \"-\"           only for even partitions of even N\n"
    "  signs   := (\"+\" | \"-\")+        one per distinct part, largest part first\n"
    "                                 (empty only for the empty partition)\n"
    "Series:  N0=<int> nu=<orbit> sigma=<signs>\n"
    "Examples: \"[4,2,1];--+\"  \"[2,2]+;-\"  \"N0=1 nu=[1] sigma=+\"\n";

struct Options {
    std::string format = "text";
    int n = 0;
    int n0 = 0;
    int max_n = 8;
    std::uint64_t seed = 1;
    std::size_t trials = 500;
    std::string label;
    std::string series;
    std::string mu;
    std::string from;
    std::string to;
    std::string orbit;
    std::string levi_orbit;
    std::string lambda;
};

struct Report {
    Json inputs = Json::object();
    Json results = Json::array();
    std::vector<std::string> text;
    std::vector<std::vector<std::string>> csv;  // first row is the header
    int code = kOk;
};

Json to_json(const Partition& p) { return Json(p.parts()); }

Json split_json(Split s)
{
    switch (s) {
    case Split::plus: return "+";
    case Split::minus: return "-";
    case Split::none: break;
    }
    return nullptr;
}

Json to_json(const OrbitLabel& o)
{
    return Json{{"lambda", to_json(o.lambda)}, {"split", split_json(o.split)}};
}

Json to_json(const PairLabel& p)
{
    return Json{{"lambda", to_json(p.orbit.lambda)},
                {"split", split_json(p.orbit.split)},
                {"tau", Json(p.tau)}};
}

Json to_json(const CuspidalDatum& c)
{
    return Json{{"N0", c.N0}, {"nu", to_json(c.nu)}, {"sigma", Json(c.sigma)}};
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"')
            q += '"';
        q += ch;
    }
    return q + '"';
}

void require_nonnegative(int n, const char* name)
{
    if (n < 0)
        throw CLI::ValidationError(std::string(name) + " must be nonnegative");
}

// ---- commands ----------------------------------------------------------

Report cmd_partitions(const Options& o)
{
    require_nonnegative(o.n, "--n");
    Report r;
    r.inputs["n"] = o.n;
    r.csv.push_back({"partition", "n", "conjugate", "hook_dimension"});
    for (const auto& p : enumerate_partitions(o.n)) {
        const auto dim = hook_dimension(p);
        r.results.push_back(Json{{"partition", to_json(p)},
                                 {"n", n_invariant(p)},
                                 {"conjugate", to_json(conjugate(p))},
                                 {"hook_dimension", dim}});
        r.text.push_back(format_partition(p) + "  n=" + std::to_string(n_invariant(p)) +
                         "  conjugate=" + format_partition(conjugate(p)) +
                         "  dim=" + std::to_string(dim));
        r.csv.push_back({format_partition(p), std::to_string(n_invariant(p)),
                         format_partition(conjugate(p)), std::to_string(dim)});
    }
    return r;
}

Report cmd_dominance(const Options& o)
{
    const Partition mu = parse_partition(o.mu);
    const Partition lambda = parse_partition(o.lambda);
    Report r;
    r.inputs["mu"] = o.mu;
    r.inputs["lambda"] = o.lambda;
    const bool le = dominance_leq(mu, lambda);
    const bool ge = dominance_leq(lambda, mu);
    r.results.push_back(Json{{"mu_leq_lambda", le}, {"lambda_leq_mu", ge}});
    r.text.push_back("mu <= lambda: " + std::string(le ? "true" : "false"));
    r.text.push_back("lambda <= mu: " + std::string(ge ? "true" : "false"));
    r.csv = {{"mu_leq_lambda", "lambda_leq_mu"}, {le ? "true" : "false", ge ? "true" : "false"}};
    return r;
}

Report cmd_orbits(const Options& o)
{
    require_nonnegative(o.n, "--n");
    Report r;
    r.inputs["n"] = o.n;
    const GroupContext ctx = GroupContext::make(o.n);
    r.csv.push_back({"orbit", "dimension", "h", "order_A_Gtheta", "order_A_H"});
    for (const auto& orbit : enumerate_orbits(o.n)) {
        const auto dim = orbit_dimension(ctx, orbit.lambda);
        ComponentGroups g{0, 1, 1};
        if (!orbit.lambda.empty())
            g = component_groups(orbit.lambda);
        r.results.push_back(Json{{"orbit", to_json(orbit)},
                                 {"dimension", dim},
                                 {"h", g.h},
                                 {"order_A_Gtheta", g.order_A_Gtheta},
                                 {"order_A_H", g.order_A_H}});
        r.text.push_back(format_orbit(orbit) + "  dim=" + std::to_string(dim) +
                         "  |A_Gtheta|=" + std::to_string(g.order_A_Gtheta) +
                         "  |A_H|=" + std::to_string(g.order_A_H));
        r.csv.push_back({format_orbit(orbit), std::to_string(dim), std::to_string(g.h),
                         std::to_string(g.order_A_Gtheta), std::to_string(g.order_A_H)});
    }
    return r;
}

Report cmd_pairs(const Options& o, bool cuspidal_only)
{
    require_nonnegative(o.n, "--n");
    Report r;
    r.inputs["n"] = o.n;
    r.csv.push_back({"pair", "cuspidal"});
    std::size_t count = 0;
    for (const auto& p : enumerate_pairs(o.n)) {
        const bool cusp = is_cuspidal(p);
        if (cuspidal_only && !cusp)
            continue;
        ++count;
        Json row = to_json(p);
        row["label"] = format_label(p);
        row["cuspidal"] = cusp;
        r.results.push_back(row);
        r.text.push_back(format_label(p) + (cusp && !cuspidal_only ? "  cuspidal" : ""));
        r.csv.push_back({format_label(p), cusp ? "true" : "false"});
    }
    r.text.push_back("total: " + std::to_string(count));
    if (cuspidal_only) {
        const auto formula = cuspidal_count(o.n);
        r.text.push_back("closed form: " + std::to_string(formula));
        if (formula != static_cast<std::int64_t>(count))
            r.code = kMismatch;
    }
    return r;
}

Report cmd_series(const Options& o)
{
    require_nonnegative(o.n, "--n");
    Report r;
    r.inputs["n"] = o.n;
    r.csv.push_back({"series", "a", "fiber_size"});
    for (const auto& fiber : series_partition(o.n)) {
        const int a = (o.n - fiber.datum.N0) / 2;
        Json members = Json::array();
        for (const auto& p : fiber.members)
            members.push_back(format_label(p));
        r.results.push_back(Json{{"series", to_json(fiber.datum)},
                                 {"label", format_datum(fiber.datum)},
                                 {"a", a},
                                 {"members", members}});
        r.text.push_back(format_datum(fiber.datum) + "  a=" + std::to_string(a) +
                         "  fiber=" + std::to_string(fiber.members.size()));
        r.csv.push_back({format_datum(fiber.datum), std::to_string(a),
                         std::to_string(fiber.members.size())});
        if (static_cast<std::int64_t>(fiber.members.size()) != partition_count(a))
            r.code = kMismatch;
    }
    return r;
}

Report cmd_table(const Options& o)
{
    require_nonnegative(o.n, "--n");
    Report r;
    r.inputs["n"] = o.n;
    r.csv.push_back({"pair", "series", "mu"});
    for (const auto& row : correspondence_table(o.n)) {
        r.results.push_back(Json{{"pair", to_json(row.pair)},
                                 {"series", to_json(row.series)},
                                 {"mu", to_json(row.mu)}});
        r.text.push_back(format_label(row.pair) + "  <->  " + format_datum(row.series) +
                         "  mu=" + format_partition(row.mu));
        r.csv.push_back({format_label(row.pair), format_datum(row.series),
                         format_partition(row.mu)});
    }
    return r;
}

Report cmd_support(const Options& o)
{
    const PairLabel p = parse_label(o.label);
    Report r;
    r.inputs["label"] = o.label;
    const SeriesMembership m = cuspidal_support(p);
    r.results.push_back(Json{{"pair", to_json(p)},
                             {"series", to_json(m.datum)},
                             {"mu", to_json(m.mu)},
                             {"cuspidal", is_cuspidal(p)}});
    r.text.push_back("series: " + format_datum(m.datum));
    r.text.push_back("mu: " + format_partition(m.mu));
    r.csv = {{"pair", "series", "mu"},
             {format_label(p), format_datum(m.datum), format_partition(m.mu)}};
    return r;
}

Report cmd_correspond(const Options& o)
{
    const CuspidalDatum c = parse_datum(o.series);
    const Partition mu = parse_partition(o.mu);
    const int N = o.n > 0 ? o.n : c.N0 + 2 * mu.size();
    Report r;
    r.inputs["series"] = o.series;
    r.inputs["mu"] = o.mu;
    r.inputs["n"] = N;
    const PairLabel p = gamma(c, mu);
    if (p.orbit.lambda.size() != N)
        throw CLI::ValidationError("--n does not match N0 + 2|mu|");
    const OrbitLabel induced = induced_orbit(c, mu, N);
    const PairLabel unit = unit_rep_orbit(c, N);
    const PairLabel sign = sign_rep_orbit(c, N);
    r.results.push_back(Json{{"gamma", to_json(p)},
                             {"induced_orbit", to_json(induced)},
                             {"unit_rep", to_json(unit)},
                             {"sign_rep", to_json(sign)}});
    r.text.push_back("gamma: " + format_label(p));
    r.text.push_back("induced orbit: " + format_orbit(induced));
    r.text.push_back("unit representation: " + format_label(unit));
    r.text.push_back("sign representation: " + format_label(sign));
    r.csv = {{"gamma", "induced_orbit", "unit_rep", "sign_rep"},
             {format_label(p), format_orbit(induced), format_label(unit), format_label(sign)}};
    return r;
}

Report cmd_restrict(const Options& o)
{
    const PairLabel p = parse_label(o.from);
    const PairLabel q = parse_label(o.to);
    Report r;
    r.inputs["from"] = o.from;
    r.inputs["to"] = o.to;
    if (q.orbit.lambda.size() != p.orbit.lambda.size() - 2)
        throw CLI::ValidationError("--to must be a pair over N-2");
    Json procs = Json::array();
    r.csv.push_back({"kind", "block", "dim_Y", "s", "full", "d_member"});
    for (const auto& proc : procedures(p.orbit.lambda, q.orbit.lambda)) {
        const YDimension y = y_dimension(p.orbit.lambda, q.orbit.lambda, proc);
        Json entry{{"kind", to_string(proc.kind)},
                   {"block", proc.block},
                   {"dim_Y", y.dim_Y},
                   {"s", y.s.to_string()},
                   {"full", y.full}};
        std::string member = "n/a";
        if (proc.kind == ProcedureKind::A_prime) {
            const bool d = d_member(p.tau, q.tau, proc.block, p.orbit.lambda, q.orbit.lambda);
            entry["d_member"] = d;
            member = d ? "true" : "false";
        } else {
            entry["d_member"] = nullptr;
        }
        procs.push_back(entry);
        r.text.push_back("procedure " + to_string(proc.kind) + "_" + std::to_string(proc.block) +
                         "  dim_Y=" + std::to_string(y.dim_Y) + "  s=" + y.s.to_string() +
                         "  full=" + (y.full ? "true" : "false") + "  D=" + member);
        r.csv.push_back({to_string(proc.kind), std::to_string(proc.block), std::to_string(y.dim_Y),
                         y.s.to_string(), y.full ? "true" : "false", member});
    }
    const int mult = epsilon_multiplicity(p, q);
    if (procs.empty())
        r.text.push_back("no procedure relates the two partitions");
    r.text.push_back("multiplicity: " + std::to_string(mult));
    r.results.push_back(Json{{"procedures", procs}, {"multiplicity", mult}});
    return r;
}

Report cmd_branching(const Options& o)
{
    require_nonnegative(o.max_n, "--max-n");
    Report r;
    r.inputs["max_n"] = o.max_n;
    r.csv.push_back({"N", "checks", "violations"});
    for (int N = 2; N <= o.max_n; ++N) {
        std::size_t checks = 0;
        Json violations = Json::array();
        for (const auto& c : enumerate_series(N)) {
            const int a = (N - c.N0) / 2;
            if (a < 1)
                continue;
            for (const auto& mu : enumerate_partitions(a))
                for (const auto& mu_prime : enumerate_partitions(a - 1)) {
                    ++checks;
                    const BranchingCheck b = branching_consistency(c, mu, mu_prime, N);
                    if (!b.consistent())
                        violations.push_back(Json{{"series", format_datum(c)},
                                                  {"mu", format_partition(mu)},
                                                  {"mu_prime", format_partition(mu_prime)},
                                                  {"box_removal", b.box_removal},
                                                  {"epsilon", b.epsilon}});
                }
        }
        if (!violations.empty())
            r.code = kMismatch;
        r.text.push_back("N=" + std::to_string(N) + "  checks=" + std::to_string(checks) +
                         "  violations=" + std::to_string(violations.size()));
        r.csv.push_back({std::to_string(N), std::to_string(checks),
                         std::to_string(violations.size())});
        r.results.push_back(Json{{"N", N}, {"checks", checks}, {"violations", violations}});
    }
    return r;
}

Report cmd_dims(const Options& o)
{
    const OrbitLabel orbit = parse_orbit(o.orbit);
    const OrbitLabel levi = parse_orbit(o.levi_orbit);
    const int N = o.n > 0 ? o.n : orbit.lambda.size();
    const int N0 = levi.lambda.size();
    if (orbit.lambda.size() != N)
        throw CLI::ValidationError("--orbit must be a partition of --n");
    if (o.n0 != 0 && o.n0 != N0)
        throw CLI::ValidationError("--levi-orbit must be a partition of --n0");
    Report r;
    r.inputs["n"] = N;
    r.inputs["n0"] = N0;
    r.inputs["orbit"] = o.orbit;
    r.inputs["levi_orbit"] = o.levi_orbit;

    const std::int64_t dp = delta_P(N, N0);
    const std::int64_t dim_O = orbit_dimension(GroupContext::make(N), orbit.lambda);
    const std::int64_t dim_OL = orbit_dimension(GroupContext::make(N0), levi.lambda);
    // Z_{L_H}(v) for L_H = (GL_1)^a x SO_{N0} has dimension a + n(nu).
    const std::int64_t dimZ_u = n_invariant(orbit.lambda);
    const std::int64_t dimZ_v = dp + n_invariant(levi.lambda);
    const SAndDelta sd = s_and_delta(dimZ_u, dimZ_v, dim_O, dim_OL, dp);
    const HalfInteger d0_value =
        d0(nu_H(N), nu_H(N0), nu_H(N0), dim_OL, dim_OL, dp, dp);

    Json values{{"nu_H", nu_H(N)},
                {"nu_L", nu_H(N0)},
                {"delta_P", dp},
                {"dim_O", dim_O},
                {"dim_O_L", dim_OL},
                {"dim_X_uni", dim_X_uni(N, N0, dim_OL)},
                {"d_O", d_O(N, N0, dim_O, dim_OL).to_string()},
                {"s", sd.s.to_string()},
                {"delta", sd.delta.to_string()},
                {"d0", d0_value.to_string()}};
    r.csv.push_back({"quantity", "value"});
    for (auto it = values.begin(); it != values.end(); ++it) {
        const std::string v = it->is_string() ? it->get<std::string>() : it->dump();
        r.text.push_back(it.key() + " = " + v);
        r.csv.push_back({it.key(), v});
    }
    r.results.push_back(values);
    return r;
}

Report cmd_bw_sweep(const Options& o)
{
    Report r;
    r.inputs["trials"] = o.trials;
    r.inputs["max_n"] = o.max_n;
    r.inputs["seed"] = o.seed;
    r.csv.push_back({"group", "permutations", "checks", "violations", "equalities"});
    for (bool even : {false, true}) {
        const DeltaQSweep s = sweep_delta_Q(o.trials, o.max_n, o.seed, even);
        const std::string group = even ? "even_sign_changes" : "full";
        r.results.push_back(Json{{"group", group},
                                 {"permutations", s.permutations},
                                 {"checks", s.checks},
                                 {"violations", s.violations},
                                 {"equalities", s.equalities}});
        r.text.push_back(group + ": permutations=" + std::to_string(s.permutations) +
                         " checks=" + std::to_string(s.checks) +
                         " violations=" + std::to_string(s.violations) +
                         " equalities=" + std::to_string(s.equalities));
        r.csv.push_back({group, std::to_string(s.permutations), std::to_string(s.checks),
                         std::to_string(s.violations), std::to_string(s.equalities)});
        if (s.violations > 0)
            r.code = kMismatch;
    }
    return r;
}

Report cmd_count(const Options& o)
{
    require_nonnegative(o.max_n, "--max-n");
    Report r;
    r.inputs["max_n"] = o.max_n;
    r.csv.push_back({"N", "pairs", "cuspidal", "formula", "series_sum", "match"});
    for (int N = 0; N <= o.max_n; ++N) {
        const auto total = total_count_identity(N);
        const auto cusp = static_cast<std::int64_t>(enumerate_cuspidal(N).size());
        const auto formula = cuspidal_count(N);
        const bool match = cusp == formula && total.holds();
        if (!match)
            r.code = kMismatch;
        r.results.push_back(Json{{"N", N},
                                 {"pairs", total.pairs},
                                 {"cuspidal", cusp},
                                 {"formula", formula},
                                 {"series_sum", total.series_sum},
                                 {"match", match}});
        std::ostringstream line;
        line << "N=" << N << "  |Psi|=" << total.pairs << "  |Psi0|=" << cusp
             << "  formula=" << formula << "  sum=" << total.series_sum
             << (match ? "  ok" : "  MISMATCH");
        r.text.push_back(line.str());
        r.csv.push_back({std::to_string(N), std::to_string(total.pairs), std::to_string(cusp),
                         std::to_string(formula), std::to_string(total.series_sum),
                         match ? "true" : "false"});
    }
    return r;
}

Report cmd_verify_appendix(const Options&)
{
    Report r;
    int matched = 0;
    const int tables = kAppendixMaxN - kAppendixMinN + 1;
    r.csv.push_back({"N", "expected", "computed", "missing", "unexpected"});
    for (int N = kAppendixMinN; N <= kAppendixMaxN; ++N) {
        const AppendixReport rep = verify_appendix(N);
        matched += rep.ok() ? 1 : 0;
        r.results.push_back(Json{{"N", N},
                                 {"expected_rows", rep.expected_rows},
                                 {"computed_rows", rep.computed_rows},
                                 {"missing", rep.missing},
                                 {"unexpected", rep.unexpected},
                                 {"match", rep.ok()}});
        r.text.push_back("N=" + std::to_string(N) + ": " + std::to_string(rep.computed_rows) +
                         " rows, " + (rep.ok() ? "match" : "MISMATCH"));
        for (const auto& m : rep.missing)
            r.text.push_back("  missing:    " + m);
        for (const auto& u : rep.unexpected)
            r.text.push_back("  unexpected: " + u);
        r.csv.push_back({std::to_string(N), std::to_string(rep.expected_rows),
                         std::to_string(rep.computed_rows), std::to_string(rep.missing.size()),
                         std::to_string(rep.unexpected.size())});
    }
    r.text.push_back(std::to_string(matched) + "/" + std::to_string(tables) + " tables match");
    if (matched != tables)
        r.code = kMismatch;
    return r;
}

Report cmd_oracle_check(const Options& o)
{
    require_nonnegative(o.max_n, "--max-n");
    Report r;
    r.inputs["max_n"] = o.max_n;
    r.inputs["seed"] = o.seed;
    r.inputs["trials"] = o.trials;
    r.csv.push_back({"orbit", "self_adjoint", "jordan_type", "centralizer", "normal_basis",
                     "conjugate_normal_basis", "top_forms"});
    std::size_t failures = 0;
    std::uint64_t counter = 0;
    auto yes = [](bool b) { return std::string(b ? "true" : "false"); };
    for (int N = 1; N <= o.max_n; ++N) {
        const FormContext ctx = form_matrix(N);
        for (const auto& orbit : enumerate_orbits(N)) {
            const RationalMatrix x = nilpotent_representative(N, orbit.lambda, orbit.split);
            const auto n = n_invariant(orbit.lambda);
            const bool sa = is_self_adjoint(x, ctx);
            const bool jt = jordan_type(x) == orbit.lambda;
            const auto cd = centralizer_dims(x, ctx);
            const bool cz = cd.first == n && cd.second == n + N;

            auto basis_ok = [&](const RationalMatrix& y) {
                const NormalBasis nb = normal_basis(y, ctx);
                bool ok = gram_matrix(nb, ctx) == expected_gram(nb.chain_lengths) &&
                          is_chain_basis(nb, y) &&
                          Partition(nb.chain_lengths) == orbit.lambda;
                for (const auto& d : top_form_determinants(nb, y, ctx))
                    ok = ok && !d.is_zero();
                return ok;
            };
            const bool nb_ok = basis_ok(x);
            const RationalMatrix g = random_h_element(N, o.seed + counter++);
            const RationalMatrix y = conjugate_by(g, x);
            const bool conj_ok = is_self_adjoint(y, ctx) && jordan_type(y) == orbit.lambda &&
                                 basis_ok(y);
            const bool all = sa && jt && cz && nb_ok && conj_ok;
            failures += all ? 0 : 1;
            r.results.push_back(Json{{"orbit", format_orbit(orbit)},
                                     {"self_adjoint", sa},
                                     {"jordan_type", jt},
                                     {"centralizer", Json::array({cd.first, cd.second})},
                                     {"centralizer_expected", Json::array({n, n + N})},
                                     {"normal_basis", nb_ok},
                                     {"conjugate_normal_basis", conj_ok}});
            r.text.push_back(format_orbit(orbit) + (all ? "  ok" : "  FAIL") +
                             "  centralizer=(" + std::to_string(cd.first) + "," +
                             std::to_string(cd.second) + ")");
            r.csv.push_back({format_orbit(orbit), yes(sa), yes(jt), yes(cz), yes(nb_ok),
                             yes(conj_ok), yes(nb_ok)});
        }
        if (N % 2 == 0) {
            const Partition regular{N};
            const RationalMatrix xp = nilpotent_representative(N, regular, Split::plus);
            const RationalMatrix xm = nilpotent_representative(N, regular, Split::minus);
            const RationalMatrix t = t_n(ctx);
            std::size_t conjugate_hits = 0;
            for (std::size_t k = 0; k < o.trials; ++k) {
                const RationalMatrix g = random_h_element(N, o.seed + counter++);
                if (conjugate_by(g, xp) == xm)
                    ++conjugate_hits;
            }
            const bool witness = t * xp * t == xm;
            const bool ok = conjugate_hits == 0 && witness;
            failures += ok ? 0 : 1;
            r.results.push_back(Json{{"split_pair", format_partition(regular)},
                                     {"random_conjugations", o.trials},
                                     {"conjugate_hits", conjugate_hits},
                                     {"t_n_witness", witness}});
            r.text.push_back(format_partition(regular) + "+/-  random H conjugations=" +
                             std::to_string(o.trials) + "  hits=" +
                             std::to_string(conjugate_hits) + "  t_n witness=" + yes(witness));
        }
    }
    r.text.push_back("failures: " + std::to_string(failures));
    if (failures > 0)
        r.code = kMismatch;
    return r;
}

void emit(const std::string& command, const std::string& format, const Report& r,
          std::ostream& out)
{
    if (format == "json") {
        Json doc{{"command", command}, {"inputs", r.inputs}, {"results", r.results}};
        out << doc.dump(2) << '\n';
    } else if (format == "csv") {
        for (const auto& row : r.csv) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << csv_field(row[i]);
            out << '\n';
        }
    } else {
        for (const auto& line : r.text)
            out << line << '\n';
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Generalized Springer correspondence for GL_N/O_N"};
    app.footer(kGrammar);
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    std::string chosen;
    std::function<Report()> action;
    auto sub = [&](const char* name, const char* help, std::function<Report()> fn) {
        CLI::App* s = app.add_subcommand(name, help);
        s->callback([&chosen, &action, name, fn] {
            chosen = name;
            action = fn;
        });
        return s;
    };

    auto* c = sub("partitions", "Partitions of n with n(lambda), conjugate, hook dimension",
                  [&] { return cmd_partitions(o); });
    c->add_option("--n", o.n, "Size")->required();
    c = sub("dominance", "Compare two partitions in dominance order",
            [&] { return cmd_dominance(o); });
    c->add_option("--mu", o.mu)->required();
    c->add_option("--lambda", o.lambda)->required();
    c = sub("orbits", "H-orbits with dimensions and component groups",
            [&] { return cmd_orbits(o); });
    c->add_option("--n", o.n)->required();
    c = sub("pairs", "All pairs (orbit, local system)", [&] { return cmd_pairs(o, false); });
    c->add_option("--n", o.n)->required();
    c = sub("cuspidal", "Cuspidal pairs and the closed-form count",
            [&] { return cmd_pairs(o, true); });
    c->add_option("--n", o.n)->required();
    c = sub("series", "Series data and fiber sizes", [&] { return cmd_series(o); });
    c->add_option("--n", o.n)->required();
    c = sub("table", "Correspondence table", [&] { return cmd_table(o); });
    c->add_option("--n", o.n)->required();
    c = sub("support", "Cuspidal support of a pair", [&] { return cmd_support(o); });
    c->add_option("--label", o.label, "Pair label, e.g. \"[4,2,1];--+\"")->required();
    c = sub("correspond", "Image of (series, mu) and related orbits",
            [&] { return cmd_correspond(o); });
    c->add_option("--series", o.series, "e.g. \"N0=1 nu=[1] sigma=+\"")->required();
    c->add_option("--mu", o.mu)->required();
    c->add_option("--n", o.n);
    c = sub("restrict", "Restriction data between pairs over N and N-2",
            [&] { return cmd_restrict(o); });
    c->add_option("--from", o.from)->required();
    c->add_option("--to", o.to)->required();
    c = sub("branching", "Exhaustive branching consistency sweep",
            [&] { return cmd_branching(o); });
    c->add_option("--max-n", o.max_n);
    c = sub("dims", "Dimension formulas for an orbit and a Levi orbit",
            [&] { return cmd_dims(o); });
    c->add_option("--n", o.n);
    c->add_option("--n0", o.n0);
    c->add_option("--orbit", o.orbit)->required();
    c->add_option("--levi-orbit", o.levi_orbit)->required();
    c = sub("bw-sweep", "Random signed permutation check of Delta_Q <= Delta_P - b_w",
            [&] { return cmd_bw_sweep(o); });
    c->add_option("--trials", o.trials);
    c->add_option("--max-n", o.max_n);
    c->add_option("--seed", o.seed);
    c = sub("count", "Enumeration against the closed-form counts",
            [&] { return cmd_count(o); });
    c->add_option("--max-n", o.max_n);
    sub("verify-appendix", "Compare computed tables with the golden data",
        [&] { return cmd_verify_appendix(o); });
    c = sub("oracle-check", "Exact matrix checks of representatives",
            [&] { return cmd_oracle_check(o); });
    c->add_option("--max-n", o.max_n);
    c->add_option("--seed", o.seed);
    c->add_option("--trials", o.trials);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    try {
        const Report r = action();
        emit(chosen, o.format, r, out);
        return r.code;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n\n" << kGrammar;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n\n" << kGrammar;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
    }
    return kUsage;
}

}  // namespace springer::cli
