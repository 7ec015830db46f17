#include <colorlie/cli.hpp>
#include <colorlie/envelope.hpp>
#include <colorlie/errors.hpp>
#include <colorlie/growth.hpp>
#include <colorlie/oracle.hpp>
#include <colorlie/schreier.hpp>
#include <colorlie/series.hpp>
#include <colorlie/witt.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace colorlie::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t default_truncation = 32;

class VerificationMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integers that fit in 64 bits are JSON numbers; larger ones are decimal
// strings, since JSON consumers rarely handle arbitrary precision.
Json to_json(const Integer& value) {
  if (const auto small = to_int64(value)) return *small;
  return value.get_str();
}

Json to_json(std::span<const Integer> values) {
  Json array = Json::array();
  for (const Integer& v : values) array.push_back(to_json(v));
  return array;
}

// Everything a subcommand produces, in a shape all three formats can render.
struct Document {
  Json result;
  Json meta = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::optional<std::string> scalar;
  bool failed = false;
};

Document scalar_document(const Integer& value, std::size_t truncation) {
  Document doc;
  doc.result = to_json(value);
  doc.meta["truncation"] = truncation;
  doc.scalar = value.get_str();
  return doc;
}

Document series_document(const TruncatedSeries& f) {
  Document doc;
  doc.result = to_json(f.coefficients());
  doc.meta["truncation"] = f.order();
  doc.columns = {"n", "coefficient"};
  for (std::size_t n = 0; n <= f.order(); ++n) {
    doc.rows.push_back({std::to_string(n), f[n].get_str()});
  }
  return doc;
}

std::string json_cell(const Json& value) {
  return value.is_string() ? value.get<std::string>() : value.dump();
}

void write_document(const Document& doc, const std::string& format,
                    std::ostream& out) {
  if (format == "json") {
    Json root;
    root["result"] = doc.result;
    root["meta"] = doc.meta;
    out << root.dump(2) << '\n';
    return;
  }
  if (doc.scalar) {
    if (format == "csv") out << "value\n";
    out << *doc.scalar << '\n';
    return;
  }
  if (format == "csv") {
    for (std::size_t i = 0; i < doc.columns.size(); ++i) {
      out << (i ? "," : "") << doc.columns[i];
    }
    out << '\n';
    for (const auto& row : doc.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
      out << '\n';
    }
    return;
  }
  std::vector<std::size_t> widths(doc.columns.size());
  for (std::size_t i = 0; i < doc.columns.size(); ++i) widths[i] = doc.columns[i].size();
  for (const auto& row : doc.rows) {
    for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "  " : "") << std::setw(static_cast<int>(widths[i])) << cells[i];
    }
    out << '\n';
  };
  line(doc.columns);
  for (const auto& row : doc.rows) line(row);
}

std::vector<Integer> parse_integers(const std::string& text) {
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream is(normalized);
  std::vector<Integer> values;
  std::string token;
  while (is >> token) {
    Integer value;
    const char* digits = token.c_str();
    if (*digits == '+') ++digits;
    if (value.set_str(digits, 10) != 0) {
      throw InvalidInput("not an integer: '" + token + "'");
    }
    values.push_back(value);
  }
  return values;
}

std::vector<Integer> read_coefficients(const std::optional<std::string>& flag,
                                       std::istream& in) {
  std::vector<Integer> values;
  if (flag) {
    values = parse_integers(*flag);
  } else {
    const std::string text((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
    values = parse_integers(text);
  }
  if (values.empty()) throw InvalidInput("no coefficients given");
  return values;
}

GradedAlphabet load_alphabet(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw InvalidInput("cannot open alphabet file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(file);
  } catch (const Json::exception& e) {
    throw InvalidInput("alphabet file '" + path + "': " + e.what());
  }
  try {
    const auto moduli = doc.value("group", std::vector<unsigned>{});
    const auto gamma =
        doc.value("gamma_on_generators", std::vector<std::vector<int>>{});
    BicharacterTable table = BicharacterTable::from_generators(moduli, gamma);
    std::vector<Generator> generators;
    for (const Json& g : doc.at("generators")) {
      generators.push_back(
          {g.at("label").get<std::string>(), g.value("weight", 1u),
           g.value("degree", std::vector<unsigned>(moduli.size(), 0))});
    }
    return {std::move(table), std::move(generators)};
  } catch (const Json::exception& e) {
    throw InvalidInput("alphabet file '" + path + "': " + e.what());
  }
}

std::pair<std::size_t, std::size_t> parse_window(const std::string& text) {
  const std::vector<Integer> ends = parse_integers(text);
  if (ends.size() != 2 || ends[0] < 0 || ends[1] < 0) {
    throw InvalidInput("--window expects two nonnegative integers a,b");
  }
  return {ends[0].get_ui(), ends[1].get_ui()};
}

// --- verification suites ---------------------------------------------------

struct CheckLog {
  std::size_t cases = 0;
  Json mismatches = Json::array();
  std::vector<std::vector<std::string>> rows;

  void record(std::string label, const Integer& expected, const Integer& actual) {
    ++cases;
    const bool ok = expected == actual;
    rows.push_back({label, expected.get_str(), actual.get_str(), ok ? "ok" : "MISMATCH"});
    if (!ok) {
      mismatches.push_back(Json{{"case", label},
                                {"formula", to_json(expected)},
                                {"oracle", to_json(actual)}});
    }
  }

  Document finish(const std::string& check) && {
    Document doc;
    doc.failed = !mismatches.empty();
    doc.result = Json{{"check", check},
                      {"passed", !doc.failed},
                      {"cases", cases},
                      {"mismatches", std::move(mismatches)}};
    doc.columns = {"case", "formula", "oracle", "status"};
    doc.rows = std::move(rows);
    return doc;
  }
};

Document verify_witt(unsigned max_rank, unsigned max_degree) {
  CheckLog log;
  for (unsigned r = 1; r <= max_rank; ++r) {
    for (unsigned n = 1; n <= max_degree; ++n) {
      log.record("witt(" + std::to_string(r) + "," + std::to_string(n) + ")",
                 witt_dim(r, n), lyndon_count(r, n));
    }
  }
  return std::move(log).finish("witt");
}

const std::vector<std::pair<unsigned, unsigned>> super_pairs = {{1, 1}, {2, 1}, {1, 2}};

Document verify_color_witt(unsigned max_degree) {
  CheckLog log;
  for (const auto& [r, s] : super_pairs) {
    const GradedAlphabet alphabet = GradedAlphabet::free_superalgebra(r, s);
    FreeLieRealization realization(alphabet);
    for (unsigned n = 1; n <= max_degree; ++n) {
      const LieSpanResult span = realization.span(n);
      log.record("color_witt(" + std::to_string(r) + "," + std::to_string(s) +
                     "," + std::to_string(n) + ")",
                 color_witt_dim(r, s, n),
                 Integer(static_cast<unsigned long>(span.even + span.odd)));
    }
  }
  return std::move(log).finish("color-witt");
}

Document verify_pbw(unsigned max_degree) {
  CheckLog log;
  for (const auto& [r, s] : super_pairs) {
    const SignedDimensionSequence split =
        oracle_parity_split(GradedAlphabet::free_superalgebra(r, s), max_degree);
    const TruncatedSeries envelope = enveloping_series(split);
    const TruncatedSeries free_associative =
        geom_inverse(TruncatedSeries::monomial(Integer(r + s), 1, max_degree));
    for (unsigned n = 0; n <= max_degree; ++n) {
      const std::string label = "(" + std::to_string(r) + "," + std::to_string(s) +
                                ") t^" + std::to_string(n);
      log.record("U(L) vs A<X> " + label, free_associative[n], envelope[n]);
      log.record("pbw_count " + label, envelope[n], pbw_count(split, std::nullopt, n));
    }
  }
  return std::move(log).finish("pbw");
}

std::vector<std::pair<std::string, GradedAlphabet>> jacobi_configurations() {
  std::vector<std::pair<std::string, GradedAlphabet>> configs;
  configs.emplace_back("(2,0) trivial G",
                       GradedAlphabet::even_weighted(std::vector<unsigned>{1, 1}));
  configs.emplace_back("(1,1) Z2", GradedAlphabet::free_superalgebra(1, 1));
  configs.emplace_back(
      "Z2xZ2 color",
      GradedAlphabet(BicharacterTable::from_generators({2, 2}, {{1, -1}, {-1, -1}}),
                     {{"a", 1, {1, 0}}, {"b", 1, {0, 1}}, {"c", 1, {1, 1}}}));
  return configs;
}

Document verify_jacobi_suite(std::size_t trials, unsigned max_degree,
                             std::uint64_t seed) {
  Document doc;
  doc.result = Json{{"check", "jacobi"}, {"passed", true}, {"configurations", Json::array()}};
  doc.columns = {"configuration", "trials", "skew_failures", "jacobi_failures", "status"};
  for (const auto& [name, alphabet] : jacobi_configurations()) {
    const JacobiReport report = verify_jacobi(alphabet, trials, max_degree, seed);
    Json entry{{"configuration", name},
               {"trials", report.trials},
               {"skew_failures", report.skew_failures},
               {"jacobi_failures", report.jacobi_failures},
               {"passed", report.passed()}};
    if (report.witness) entry["witness"] = *report.witness;
    doc.result["configurations"].push_back(std::move(entry));
    doc.rows.push_back({name, std::to_string(report.trials),
                        std::to_string(report.skew_failures),
                        std::to_string(report.jacobi_failures),
                        report.passed() ? "ok" : "MISMATCH"});
    if (!report.passed()) {
      doc.failed = true;
      doc.result["passed"] = false;
    }
  }
  return doc;
}

Document verify_schreier_consistency(std::size_t order) {
  CheckLog log;
  const TruncatedSeries two_t = TruncatedSeries::monomial(Integer(2), 1, order);
  const TruncatedSeries witt = witt_series(2, order);
  const std::vector<std::pair<std::string, TruncatedSeries>> cases = {
      {"K=[L,L]", two_t},
      {"codim 1", TruncatedSeries::monomial(Integer(1), 1, order)},
  };
  for (const auto& [name, quotient] : cases) {
    const TruncatedSeries generators = lie_schreier_series(two_t, quotient);
    const TruncatedSeries subalgebra = free_lie_series(generators);
    const TruncatedSeries expected = witt - quotient;
    for (std::size_t n = 1; n <= order; ++n) {
      log.record(name + " dim K_" + std::to_string(n), expected[n], subalgebra[n]);
    }
  }
  return std::move(log).finish("schreier-consistency");
}

Document verify_growth_rate(std::size_t order) {
  Document doc;
  doc.result = Json{{"check", "growth-rate"}, {"passed", true}, {"cases", Json::array()}};
  doc.columns = {"(r,s)", "expected", "lie_rate", "enveloping_rate", "status"};
  for (const auto& [r, s] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {1, 1}}) {
    const GrowthComparison cmp = enveloping_growth_matches(r, s, order);
    const std::string label = "(" + std::to_string(r) + "," + std::to_string(s) + ")";
    doc.result["cases"].push_back(Json{{"r", r},
                                       {"s", s},
                                       {"expected", cmp.expected},
                                       {"lie_rate", cmp.lie.rate},
                                       {"enveloping_rate", cmp.enveloping.rate},
                                       {"difference", cmp.difference},
                                       {"passed", cmp.passed}});
    std::ostringstream lie, env;
    lie << std::setprecision(6) << cmp.lie.rate;
    env << std::setprecision(6) << cmp.enveloping.rate;
    doc.rows.push_back({label, std::to_string(r + s), lie.str(), env.str(),
                        cmp.passed ? "ok" : "MISMATCH"});
    if (!cmp.passed) {
      doc.failed = true;
      doc.result["passed"] = false;
    }
  }
  doc.meta["window"] = Json::array({order / 2, order});
  return doc;
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Hilbert series, Witt dimensions and growth of free color Lie superalgebras",
               "colorlie"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "table";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));

  std::optional<Document> produced;
  const auto emit = [&](Document doc) { produced = std::move(doc); };

  // witt
  auto* witt_cmd = app.add_subcommand("witt", "Dimensions of free (color) Lie superalgebras");
  unsigned long witt_rank = 0, witt_odd = 0;
  std::optional<unsigned long> witt_degree;
  std::optional<std::size_t> witt_max_degree;
  witt_cmd->add_option("--rank", witt_rank, "Number of even generators r")->required();
  witt_cmd->add_option("--odd", witt_odd, "Number of odd generators s");
  auto* degree_opt = witt_cmd->add_option("--degree", witt_degree, "Single degree n");
  witt_cmd->add_option("--max-degree", witt_max_degree, "Series up to degree N")
      ->excludes(degree_opt);
  witt_cmd->callback([&] {
    const auto dim = [&](unsigned long n) {
      return witt_odd == 0 ? witt_dim(witt_rank, n) : color_witt_dim(witt_rank, witt_odd, n);
    };
    if (witt_degree) {
      if (*witt_degree == 0) throw InvalidInput("--degree must be >= 1");
      emit(scalar_document(dim(*witt_degree), *witt_degree));
      return;
    }
    const std::size_t order = witt_max_degree.value_or(default_truncation);
    TruncatedSeries f(order);
    for (std::size_t n = 1; n <= order; ++n) f[n] = dim(n);
    emit(series_document(f));
  });

  // euler / inv-euler
  std::optional<std::string> euler_coeffs;
  std::size_t euler_order = default_truncation;
  auto* euler_cmd = app.add_subcommand("euler", "Euler transform prod (1-t^i)^(-a_i)");
  auto* inv_euler_cmd = app.add_subcommand("inv-euler", "Inverse Euler transform");
  for (auto* cmd : {euler_cmd, inv_euler_cmd}) {
    cmd->add_option("--coeffs", euler_coeffs, "Coefficients c0,c1,... (default: stdin)");
    cmd->add_option("--max-degree", euler_order, "Truncation order N");
  }
  euler_cmd->callback([&] {
    emit(series_document(
        euler_transform(TruncatedSeries(read_coefficients(euler_coeffs, in), euler_order))));
  });
  inv_euler_cmd->callback([&] {
    emit(series_document(inverse_euler_transform(
        TruncatedSeries(read_coefficients(euler_coeffs, in), euler_order))));
  });

  // envelope
  auto* envelope_cmd =
      app.add_subcommand("envelope", "Hilbert series of (restricted) enveloping algebras");
  std::string even_list, odd_list;
  std::optional<std::uint64_t> prime;
  std::size_t envelope_order = default_truncation;
  RestrictedOptions restricted;
  envelope_cmd->add_option("--even", even_list, "Even dimensions a1,a2,...");
  envelope_cmd->add_option("--odd", odd_list, "Odd dimensions b1,b2,...");
  envelope_cmd->add_option("--prime", prime, "Characteristic p for u(L)");
  envelope_cmd->add_flag("--trivial-grading", restricted.trivial_grading,
                         "Grading group is {1}; any prime is admissible");
  envelope_cmd->add_flag("--override-characteristic", restricted.override_characteristic,
                         "Accept p < 5 for a nontrivial grading");
  envelope_cmd->add_option("--max-degree", envelope_order, "Truncation order N");
  envelope_cmd->callback([&] {
    const SignedDimensionSequence dims = SignedDimensionSequence::padded(
        parse_integers(even_list), parse_integers(odd_list), envelope_order);
    emit(series_document(prime ? restricted_enveloping_series(dims, *prime, restricted)
                               : enveloping_series(dims)));
  });

  // schreier
  auto* schreier_cmd = app.add_subcommand("schreier", "Schreier rank and series formulas");
  schreier_cmd->require_subcommand(1);
  auto* group_cmd = schreier_cmd->add_subcommand("group", "Subgroups of free groups");
  std::string group_rank, group_index;
  group_cmd->add_option("--rank", group_rank, "Rank n of the free group")->required();
  group_cmd->add_option("--index", group_index, "Index [G:K]")->required();
  group_cmd->callback([&] {
    const auto rank = parse_integers(group_rank);
    const auto index = parse_integers(group_index);
    if (rank.size() != 1 || index.size() != 1) throw InvalidInput("expected single integers");
    emit(scalar_document(group_schreier_rank(rank[0], index[0]), default_truncation));
  });
  auto* lie_cmd = schreier_cmd->add_subcommand("lie", "H(Z) = (H(X)-1) E(H(L/K)) + 1");
  std::string alphabet_path, quotient_coeffs;
  std::size_t lie_order = default_truncation;
  lie_cmd->add_option("--alphabet", alphabet_path, "Alphabet JSON file")->required();
  lie_cmd->add_option("--quotient-coeffs", quotient_coeffs, "H(L/K) coefficients c0,c1,...")
      ->required();
  lie_cmd->add_option("--max-degree", lie_order, "Truncation order N");
  lie_cmd->callback([&] {
    const GradedAlphabet alphabet = load_alphabet(alphabet_path);
    if (!alphabet.all_even()) {
      throw UnsupportedParity("the series Schreier formula covers even alphabets only");
    }
    emit(series_document(lie_schreier_series(
        alphabet_series(alphabet, lie_order),
        TruncatedSeries(parse_integers(quotient_coeffs), lie_order))));
  });
  auto* color_cmd = schreier_cmd->add_subcommand("color", "2^s (rank L - 1) + 1");
  std::string rank_l;
  unsigned long odd_codim = 0;
  color_cmd->add_option("--rank-l", rank_l, "rank(L)")->required();
  color_cmd->add_option("--odd-codim", odd_codim, "dim (L/K)_-")->required();
  color_cmd->callback([&] {
    const auto rank = parse_integers(rank_l);
    if (rank.size() != 1) throw InvalidInput("expected a single integer for --rank-l");
    emit(scalar_document(color_schreier_rank(rank[0], odd_codim), default_truncation));
  });

  // growth
  auto* growth_cmd = app.add_subcommand("growth", "Growth rate of a dimension series");
  std::optional<std::string> growth_coeffs;
  std::string window_text;
  growth_cmd->add_option("--coeffs", growth_coeffs, "dim_0,dim_1,... (default: stdin)");
  growth_cmd->add_option("--window", window_text, "Window a,b")->required();
  growth_cmd->callback([&] {
    const std::vector<Integer> coeffs = read_coefficients(growth_coeffs, in);
    if (coeffs.size() < 2) throw InvalidInput("need at least two coefficients");
    const TruncatedSeries dims(coeffs, coeffs.size() - 1);
    const auto [a, b] = parse_window(window_text);
    const GrowthEstimate est = growth_rate_estimate(dims, {a, b});
    Document doc;
    doc.result = Json{{"rate", est.rate},
                      {"method", std::string(to_string(est.method))},
                      {"classification", std::string(to_string(est.classification))},
                      {"raw_root", est.raw_root},
                      {"ratio", est.ratio ? Json(*est.ratio) : Json(nullptr)},
                      {"polynomial_degree",
                       est.polynomial_degree ? Json(*est.polynomial_degree) : Json(nullptr)},
                      {"fit_residual", est.fit_residual ? Json(*est.fit_residual) : Json(nullptr)}};
    doc.meta["truncation"] = dims.order();
    doc.meta["window"] = Json::array({a, b});
    doc.columns = {"quantity", "value"};
    for (const auto& [key, value] : doc.result.items()) {
      doc.rows.push_back({key, json_cell(value)});
    }
    emit(std::move(doc));
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check closed formulas against the oracle");
  std::string check;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> max_rank, max_degree;
  std::size_t trials = 100;
  verify_cmd->add_option("check", check, "Which check to run")
      ->required()
      ->check(CLI::IsMember(
          {"witt", "color-witt", "pbw", "jacobi", "schreier-consistency", "growth-rate"}));
  verify_cmd->add_option("--seed", seed, "Random seed (jacobi)");
  verify_cmd->add_option("--max-rank", max_rank, "Largest rank (witt)");
  verify_cmd->add_option("--max-degree", max_degree, "Largest degree / truncation");
  verify_cmd->add_option("--trials", trials, "Random trials per configuration (jacobi)");
  verify_cmd->callback([&] {
    Document doc;
    std::size_t truncation = 0;
    if (check == "witt") {
      truncation = max_degree.value_or(10);
      doc = verify_witt(max_rank.value_or(3), static_cast<unsigned>(truncation));
    } else if (check == "color-witt") {
      truncation = max_degree.value_or(5);
      doc = verify_color_witt(static_cast<unsigned>(truncation));
    } else if (check == "pbw") {
      truncation = max_degree.value_or(5);
      doc = verify_pbw(static_cast<unsigned>(truncation));
    } else if (check == "jacobi") {
      truncation = max_degree.value_or(4);
      doc = verify_jacobi_suite(trials, static_cast<unsigned>(truncation), seed.value_or(1));
      doc.meta["seed"] = seed.value_or(1);
    } else if (check == "schreier-consistency") {
      truncation = max_degree.value_or(15);
      doc = verify_schreier_consistency(truncation);
    } else {
      truncation = max_degree.value_or(200);
      doc = verify_growth_rate(truncation);
    }
    Json meta{{"truncation", truncation}};
    for (const auto& [key, value] : doc.meta.items()) meta[key] = value;
    doc.meta = std::move(meta);
    emit(std::move(doc));
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_invalid_input;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid_input;
  }

  if (!produced) return exit_ok;
  write_document(*produced, format, out);
  if (produced->failed) {
    err << "verification mismatch\n";
    return exit_verification_mismatch;
  }
  return exit_ok;
}

}  // namespace colorlie::cli
