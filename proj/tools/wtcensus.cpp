// wtcensus: counting, listing, codec, verification, and OEIS cross-check for
// rooted weighted bicolored plane trees.
//
// Exit codes: 0 success, 1 data/verification failure, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wtcensus/census.hpp"
#include "wtcensus/dyck.hpp"
#include "wtcensus/oeis.hpp"
#include "wtcensus/tree.hpp"

using nlohmann::json;
using namespace wtcensus;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitUsage = 2;

int fail(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitDataError;
}

int usage_fail(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

// (index, value) rows; table joins values with spaces, tsv keeps the indices,
// json emits an array of decimal/rational strings.
int emit_rows(const std::vector<std::pair<long long, std::string>>& rows,
              const std::string& format) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& [index, value] : rows) arr.push_back(value);
    std::cout << arr.dump() << "\n";
  } else if (format == "tsv") {
    for (const auto& [index, value] : rows) std::cout << index << "\t" << value << "\n";
  } else {
    for (std::size_t i = 0; i < rows.size(); ++i)
      std::cout << (i ? " " : "") << rows[i].second;
    std::cout << "\n";
  }
  return kExitOk;
}

std::string read_stdin() {
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

json partition_json(const Partition& p) {
  json arr = json::array();
  for (int part : p.parts()) arr.push_back(part);
  return arr;
}

json edges_json(const TreeNode& v) {
  json arr = json::array();
  for (const auto& [weight, child] : v.edges) {
    json edge;
    edge["weight"] = weight;
    edge["children"] = edges_json(child);
    arr.push_back(edge);
  }
  return arr;
}

void edges_from_json(const json& arr, std::vector<Token>& out) {
  if (!arr.is_array()) throw std::runtime_error("\"tree\" must be an array of edges");
  for (const auto& edge : arr) {
    if (!edge.is_object() || !edge.contains("weight") || !edge["weight"].is_number_integer())
      throw std::runtime_error("each edge must be {\"weight\": int, \"children\": [...]}");
    const int weight = edge["weight"].get<int>();
    out.push_back({Step::Up, weight});
    if (edge.contains("children")) edges_from_json(edge["children"], out);
    out.push_back({Step::Down, weight});
  }
}

int run_count(const std::string& kind, int max, int n, int m, bool has_max, bool has_n,
              bool has_m, const std::string& format) {
  std::vector<std::pair<long long, std::string>> rows;
  if (kind == "a") {
    if (has_max == has_n) return usage_fail("count a needs exactly one of --max or --n");
    if (has_n) max = n;
    auto a = a_rec(max);
    if (has_n) {
      rows.emplace_back(n, to_string(a[static_cast<std::size_t>(n)]));
    } else {
      for (int i = 0; i <= max; ++i) rows.emplace_back(i, to_string(a[static_cast<std::size_t>(i)]));
    }
  } else if (kind == "b") {
    if (!has_n) return usage_fail("count b needs --n");
    if (n < 1) return usage_fail("count b needs --n >= 1");
    if (has_m) {
      if (m < 1 || m > n) return usage_fail("count b needs 1 <= m <= n");
      rows.emplace_back(m, to_string(b_explicit(m, n)));
    } else {
      auto row = b_row(n);
      for (int i = 1; i <= n; ++i) rows.emplace_back(i, to_string(row[static_cast<std::size_t>(i - 1)]));
    }
  } else if (kind == "c") {
    if (has_max == has_n) return usage_fail("count c needs exactly one of --max or --n");
    if (has_n) {
      if (n < 1) return usage_fail("count c needs --n >= 1");
      rows.emplace_back(n, to_string(c_exact(n)));
    } else {
      if (max < 1) return usage_fail("count c needs --max >= 1");
      for (int i = 1; i <= max; ++i) rows.emplace_back(i, to_string(c_exact(i)));
    }
  } else {
    return usage_fail("count kind must be a, b, or c");
  }
  return emit_rows(rows, format);
}

int run_list(int weight, int edges, bool has_edges, int bound, const std::string& format) {
  if (weight > bound)
    return usage_fail("weight " + std::to_string(weight) + " exceeds the enumeration bound " +
                      std::to_string(bound) + " (raise --bound to proceed)");
  if (has_edges && (edges < 0 || edges > weight))
    return usage_fail("--edges must lie in 0.." + std::to_string(weight));
  const auto sink_rows = [&](auto&& each) {
    if (format == "json") {
      json arr = json::array();
      each([&](const WeightedDyckWord& w) { arr.push_back(render_text(w)); });
      std::cout << arr.dump() << "\n";
    } else {
      each([&](const WeightedDyckWord& w) { std::cout << render_text(w) << "\n"; });
    }
  };
  if (has_edges)
    sink_rows([&](auto&& out) { for_each_word_with_edges(weight, edges, out); });
  else
    sink_rows([&](auto&& out) { for_each_word(weight, out); });
  return kExitOk;
}

int run_decode(const std::string& input) {
  WeightedDyckWord word;
  try {
    word = parse_text(input);
  } catch (const TextParseError& e) {
    return fail(e.what());
  } catch (const WordError& e) {
    return fail(e.what());
  }
  json out;
  out["code"] = render_text(word);
  out["n"] = word.weight();
  out["m"] = word.edge_count();
  if (word.empty()) {
    out["alpha"] = json::array();
    out["beta"] = json::array();
    out["weights"] = json::array();
    out["aut_order"] = 1;
    out["tree"] = json::array();
  } else {
    auto tree = RootedTree::from_dyck(word);
    auto pass = tree.passport();
    out["alpha"] = partition_json(pass.alpha);
    out["beta"] = partition_json(pass.beta);
    out["weights"] = partition_json(tree.weight_distribution());
    out["aut_order"] = tree.aut_order();
    out["tree"] = edges_json(tree.root());
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int run_encode(const std::string& input) {
  json doc;
  try {
    doc = json::parse(input);
  } catch (const json::parse_error& e) {
    return fail(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (doc.is_object() && doc.contains("tree")) {
      std::vector<Token> tokens;
      edges_from_json(doc["tree"], tokens);
      std::cout << render_text(WeightedDyckWord::validate(std::move(tokens))) << "\n";
      return kExitOk;
    }
    if (doc.is_object() && doc.contains("code") && doc["code"].is_string()) {
      std::cout << render_text(parse_text(doc["code"].get<std::string>())) << "\n";
      return kExitOk;
    }
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  return fail("expected a JSON object with a \"tree\" array or a \"code\" string");
}

int run_verify(int n_max, int bound, const std::string& format) {
  VerifyReport report;
  try {
    report = cross_verify(n_max, bound);
  } catch (const std::exception& e) {
    return fail(std::string("verification aborted: ") + e.what());
  }
  if (format == "json") {
    json out;
    out["n_max"] = report.n_max;
    out["bound"] = report.bound;
    out["pass"] = report.pass();
    json legs = json::array();
    for (const auto& leg : report.legs) {
      json row;
      row["name"] = leg.name;
      row["pass"] = leg.pass;
      row["detail"] = leg.detail;
      legs.push_back(row);
    }
    out["legs"] = legs;
    std::cout << out.dump(2) << "\n";
  } else if (format == "tsv") {
    for (const auto& leg : report.legs)
      std::cout << leg.name << "\t" << (leg.pass ? "PASS" : "FAIL") << "\t" << leg.detail << "\n";
  } else {
    std::cout << "cross-verification to n = " << report.n_max << " (enumeration bound "
              << report.bound << ")\n";
    for (const auto& leg : report.legs)
      std::cout << "  [" << (leg.pass ? "PASS" : "FAIL") << "] " << leg.name << ": " << leg.detail
                << "\n";
    std::cout << (report.pass() ? "PASS" : "FAIL") << "\n";
  }
  return report.pass() ? kExitOk : kExitDataError;
}

int run_oeis(const std::string& fixture, bool fetch, int max, const std::string& format) {
  BFile reference;
  std::string source = "fixture";
  bool loaded = false;
  if (fetch) {
    const char* env = std::getenv("WTCENSUS_CACHE_DIR");
    std::string error;
    if (auto body = fetch_a002212(env ? env : "", error)) {
      try {
        std::istringstream in(*body);
        reference = parse_b_file(in);
        source = "fetch";
        loaded = true;
      } catch (const BFileParseError& e) {
        std::cerr << "warning: fetched b-file unreadable (" << e.what()
                  << "); falling back to fixture\n";
      }
    } else {
      std::cerr << "warning: fetch failed (" << error << "); falling back to fixture\n";
    }
  }
  if (!loaded) {
    try {
      reference = load_b_file(fixture);
    } catch (const std::exception& e) {
      return fail(e.what());
    }
  }
  SequenceCheck check;
  try {
    check = compare_sequence(a_rec(max), reference);
  } catch (const FixtureExhausted& e) {
    return fail(e.what());
  }
  if (format == "json") {
    json out;
    out["source"] = source;
    out["max"] = max;
    out["match"] = check.match;
    out["compared"] = check.compared;
    out["first_mismatch"] = check.first_mismatch;
    out["detail"] = check.detail;
    std::cout << out.dump(2) << "\n";
  } else if (format == "tsv") {
    std::cout << source << "\t" << (check.match ? "MATCH" : "MISMATCH") << "\t" << check.compared
              << "\t" << check.detail << "\n";
  } else {
    std::cout << (check.match ? "MATCH" : "MISMATCH") << " against A002212 (" << source << "): "
              << check.detail << "\n";
  }
  return check.match ? kExitOk : kExitDataError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact census of rooted weighted bicolored plane trees"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"table", "json", "tsv"};

  auto* count = app.add_subcommand("count", "print a_n, b_{m,n}, or c_n");
  std::string count_kind;
  int count_max = 0, count_n = 0, count_m = 0;
  std::string count_format = "table";
  count->add_option("kind", count_kind, "a (rooted), b (by edges), c (unrooted mass)")
      ->required()
      ->check(CLI::IsMember({"a", "b", "c"}));
  auto* count_max_opt = count->add_option("--max", count_max, "largest index, inclusive from 0 (a) or 1 (c)")
      ->check(CLI::NonNegativeNumber);
  auto* count_n_opt = count->add_option("--n", count_n, "single weight n")->check(CLI::NonNegativeNumber);
  auto* count_m_opt = count->add_option("--m", count_m, "edge count (with kind b)");
  count->add_option("--format", count_format)->check(CLI::IsMember(formats));

  auto* list = app.add_subcommand("list", "enumerate tree codes, one per line");
  int list_weight = 0, list_edges = 0, list_bound = 10;
  std::string list_format = "table";
  list->add_option("--weight", list_weight, "total weight n")->required()->check(CLI::NonNegativeNumber);
  auto* list_edges_opt = list->add_option("--edges", list_edges, "restrict to m edges");
  list->add_option("--bound", list_bound, "largest weight the command will enumerate");
  list->add_option("--format", list_format)->check(CLI::IsMember(formats));

  auto* decode = app.add_subcommand("decode", "word text -> tree JSON");
  std::string decode_input;
  auto* decode_pos = decode->add_option("word", decode_input, "tree code (reads stdin when omitted)");

  auto* encode = app.add_subcommand("encode", "tree JSON -> word text");
  std::string encode_input;
  auto* encode_pos = encode->add_option("json", encode_input, "tree JSON (reads stdin when omitted)");

  auto* verify = app.add_subcommand("verify", "cross-check every counting path");
  int verify_n_max = 8, verify_bound = 8;
  std::string verify_format = "table";
  verify->add_option("--n-max", verify_n_max, "largest weight for the formula legs")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--bound", verify_bound, "cap for the enumeration legs")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--format", verify_format)->check(CLI::IsMember(formats));

  auto* oeis = app.add_subcommand("oeis", "compare the recurrence against A002212");
  std::string oeis_fixture = "data/b002212.txt";
  bool oeis_fetch = false;
  int oeis_max = 30;
  std::string oeis_format = "table";
  oeis->add_option("--fixture", oeis_fixture, "bundled b-file path");
  oeis->add_flag("--fetch", oeis_fetch, "fetch the b-file from oeis.org (cache: WTCENSUS_CACHE_DIR)");
  oeis->add_option("--max", oeis_max, "compare indices 0..max")->check(CLI::NonNegativeNumber);
  oeis->add_option("--format", oeis_format)->check(CLI::IsMember(formats));

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

  if (count->parsed())
    return run_count(count_kind, count_max, count_n, count_m, count_max_opt->count() > 0,
                     count_n_opt->count() > 0, count_m_opt->count() > 0, count_format);
  if (list->parsed())
    return run_list(list_weight, list_edges, list_edges_opt->count() > 0, list_bound, list_format);
  if (decode->parsed())
    return run_decode(decode_pos->count() > 0 ? decode_input : read_stdin());
  if (encode->parsed())
    return run_encode(encode_pos->count() > 0 ? encode_input : read_stdin());
  if (verify->parsed()) return run_verify(verify_n_max, verify_bound, verify_format);
  if (oeis->parsed()) return run_oeis(oeis_fixture, oeis_fetch, oeis_max, oeis_format);
  return usage_fail("no subcommand");
}
