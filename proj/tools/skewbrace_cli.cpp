// Command-line front end: closed-form tables, enumeration, cross-validation
// and Cayley-table classification.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 resource limit.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "skewbrace/counts.hpp"
#include "skewbrace/enumerate.hpp"
#include "skewbrace/json_io.hpp"
#include "skewbrace/verify.hpp"

namespace sb = skewbrace;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

std::optional<sb::Family> parse_family(const std::string& s) {
  static const std::map<std::string, sb::Family> names = {
      {"1", sb::Family::P2QType1},      {"2", sb::Family::P2QType2},
      {"3", sb::Family::P2QType3},      {"4", sb::Family::P2QType4},
      {"pq-cyclic", sb::Family::PQCyclic}, {"pq-metacyclic", sb::Family::PQMetacyclic}};
  auto it = names.find(s);
  if (it == names.end())
    return std::nullopt;
  return it->second;
}

int run_tables(std::int64_t p, std::int64_t q, const std::string& format) {
  const sb::CountTable t = sb::count_table(p, q);
  if (format == "json")
    std::cout << sb::to_json(t).dump(2) << '\n';
  else
    std::cout << sb::render_csv(t);
  return kExitOk;
}

int run_pq(std::int64_t p, std::int64_t q, const std::string& format) {
  const sb::PqTable t = sb::pq_tables(p, q);
  const char* names[2] = {"PQ-Cyclic", "PQ-Metacyclic"};
  const int k = t.metacyclic_exists ? 2 : 1;
  if (format == "json") {
    sb::ordered_json rows = sb::ordered_json::array();
    for (int gamma = 0; gamma < k; ++gamma)
      for (int g = 0; g < k; ++g) {
        sb::ordered_json cls = sb::ordered_json::array();
        for (const auto& c : t.classes[gamma][g])
          cls.push_back(std::to_string(c.count) + "×" + std::to_string(c.length));
        rows.push_back({{"gamma_type", names[gamma]},
                        {"g_type", names[g]},
                        {"e_prime", t.e_prime[gamma][g]},
                        {"e", t.e[gamma][g]},
                        {"classes", cls}});
      }
    std::cout << sb::ordered_json{{"p", p}, {"q", q}, {"rows", rows}}.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "gamma_type,g_type,e_prime,e,classes\n";
  for (int gamma = 0; gamma < k; ++gamma)
    for (int g = 0; g < k; ++g)
      std::cout << names[gamma] << ',' << names[g] << ',' << t.e_prime[gamma][g] << ',' << t.e[gamma][g] << ','
                << sb::classes_string(t.classes[gamma][g]) << '\n';
  return kExitOk;
}

int run_enumerate(std::int64_t p, std::int64_t q, const std::string& type, const std::string& method,
                  const std::string& out_path, std::int64_t oracle_limit, int jobs) {
  const auto fam = parse_family(type);
  if (!fam)
    throw sb::InvalidInput("invalid-type", "type must be 1..4, pq-cyclic or pq-metacyclic");
  const auto ctx = sb::make_context(*fam, p, q);
  sb::EnumerationResult r = [&] {
    if (method == "structured")
      return sb::structured_enumerate(ctx);
    if (method == "search")
      return sb::gfe_search(ctx, jobs);
    sb::OracleOptions oo;
    oo.max_hol_order = oracle_limit;
    oo.jobs = jobs;
    return sb::closure_oracle(ctx, oo);
  }();
  if (out_path.empty()) {
    sb::write_jsonl(std::cout, r);
  } else {
    std::ofstream out(out_path);
    if (!out)
      throw sb::InvalidInput("bad-output", "cannot open " + out_path);
    sb::write_jsonl(out, r);
    std::cout << sb::summary_json(r).dump() << '\n';
  }
  return kExitOk;
}

int run_verify(std::int64_t p, std::int64_t q, std::int64_t oracle_limit, bool pq, int jobs) {
  sb::VerifyOptions opt;
  opt.oracle_limit = oracle_limit;
  opt.pq = pq;
  opt.jobs = jobs;
  const sb::Report rep = sb::verify(p, q, opt);
  std::cout << rep.to_json().dump(2) << '\n';
  return rep.ok() ? kExitOk : kExitVerify;
}

int run_classify(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw sb::InvalidInput("bad-input", "cannot open " + path);
  const sb::Classification c = sb::classify_iso_type(sb::read_cayley(in));
  sb::ordered_json j{{"type", sb::to_string(c.type)}};
  if (c.type == sb::IsoType::Other)
    j["fingerprint"] = sb::fingerprint_json(c.fingerprint);
  std::cout << j.dump() << '\n';
  return kExitOk;
}

int run_cayley(std::int64_t p, std::int64_t q, const std::string& type) {
  const auto fam = parse_family(type);
  if (!fam)
    throw sb::InvalidInput("invalid-type", "type must be 1..4, pq-cyclic or pq-metacyclic");
  const sb::Group g(sb::make_group(*fam, p, q));
  std::cout << sb::to_json(g.cayley()).dump() << '\n';
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skew braces of order p^2 q and pq: enumeration and closed-form counts"};
  app.require_subcommand(1);

  std::int64_t p = 0, q = 0;
  std::string format = "csv", type, method = "structured", out_path, in_path;
  std::int64_t oracle_limit = sb::kDefaultMaxHolOrder;
  int jobs = 1;
  bool pq = false;

  auto add_pq = [&](CLI::App* sub) {
    sub->add_option("--p", p, "prime p")->required();
    sub->add_option("--q", q, "prime q")->required();
  };

  auto* tables = app.add_subcommand("tables", "closed-form e', e, classes and totals");
  add_pq(tables);
  tables->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* pqcmd = app.add_subcommand("pq", "closed-form tables for order pq");
  add_pq(pqcmd);
  pqcmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* enumerate = app.add_subcommand("enumerate", "list every skew brace on one group as JSON lines");
  add_pq(enumerate);
  enumerate->add_option("--type", type, "1..4, pq-cyclic or pq-metacyclic")->required();
  enumerate->add_option("--method", method)->check(CLI::IsMember({"structured", "search", "oracle"}));
  enumerate->add_option("--out", out_path, "write records here and print only the summary");
  enumerate->add_option("--oracle-limit", oracle_limit, "largest holomorph the oracle may search");
  enumerate->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "cross-validate all methods against the tables");
  add_pq(verify);
  verify->add_option("--oracle-limit", oracle_limit, "largest holomorph the oracle may search");
  verify->add_flag("--pq", pq, "verify the order-pq groups instead");
  verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify-cayley", "name the isomorphism type of a Cayley table");
  classify->add_option("--in", in_path, "JSON {\"n\", \"table\"}")->required();

  auto* cayley = app.add_subcommand("cayley", "print the Cayley table of a group as JSON");
  add_pq(cayley);
  cayley->add_option("--type", type, "1..4, pq-cyclic or pq-metacyclic")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (tables->parsed())
      return run_tables(p, q, format);
    if (pqcmd->parsed())
      return run_pq(p, q, format);
    if (enumerate->parsed())
      return run_enumerate(p, q, type, method, out_path, oracle_limit, jobs);
    if (verify->parsed())
      return run_verify(p, q, oracle_limit, pq, jobs);
    if (classify->parsed())
      return run_classify(in_path);
    if (cayley->parsed())
      return run_cayley(p, q, type);
  } catch (const sb::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const sb::ResourceLimit& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const sb::Error& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kExitVerify;
  }
  return kExitInput;
}
