#include "hilb/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hilb/barth_witness.hpp"
#include "hilb/errors.hpp"
#include "hilb/integrand_parser.hpp"
#include "hilb/invariants.hpp"
#include "hilb/localization.hpp"
#include "hilb/random.hpp"
#include "hilb/verification/acceptance.hpp"

namespace hilb::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

struct GlobalOptions {
  Format format = Format::Text;
  unsigned threads = 1;
  std::uint64_t seed = 1;
};

// One computed integral with its provenance; the common output row of the
// donaldson, darboux, integrate and table commands.
struct Record {
  std::string command;
  int n = 0;
  int m = 0;
  IntegrandSpec integrand;
  ExactRational value;
  std::optional<ExactRational> raw_integral;
  std::optional<ExactRational> prefactor;
  IntegralResult integral;
  double elapsed_ms = 0;
  std::string note;
};

ordered_json rational_json(const ExactRational& r) {
  return {{"num", numerator_string(r)}, {"den", denominator_string(r)}};
}

ordered_json spec_json(const Specialization& s) {
  return {{"w1", s.w1}, {"w2", s.w2}, {"seed", std::to_string(s.seed)}};
}

ordered_json record_json(const Record& r) {
  ordered_json j;
  j["command"] = r.command;
  j["n"] = r.n;
  j["i"] = r.integrand.i;
  j["k"] = r.integrand.k;
  j["value"] = rational_json(r.value);
  j["fixed_points"] = r.integral.fixed_point_count;
  j["spec"] = spec_json(r.integral.spec_used);
  j["elapsed_ms"] = r.elapsed_ms;
  j["m"] = r.m;
  j["cross_check_spec"] = spec_json(r.integral.cross_check_spec);
  if (r.raw_integral) j["raw_integral"] = rational_json(*r.raw_integral);
  if (r.prefactor) j["prefactor"] = rational_json(*r.prefactor);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

constexpr const char* kCsvHeader = "command,n,m,i,k,num,den,fixed_points,w1,w2,seed,elapsed_ms";

std::string record_csv(const Record& r) {
  std::ostringstream row;
  row << r.command << ',' << r.n << ',' << r.m << ',' << r.integrand.i << ',' << r.integrand.k
      << ',' << numerator_string(r.value) << ',' << denominator_string(r.value) << ','
      << r.integral.fixed_point_count << ',' << r.integral.spec_used.w1 << ','
      << r.integral.spec_used.w2 << ',' << r.integral.spec_used.seed << ',' << std::fixed
      << std::setprecision(3) << r.elapsed_ms;
  return row.str();
}

std::string record_text(const Record& r) {
  std::ostringstream text;
  if (r.command == "donaldson") {
    text << "q_" << 4 * r.n - 3 << " = " << r.value << "\n";
    text << "  integral   : int_{Hilb^" << r.m << "(P^2)} " << to_string(r.integrand) << " = "
         << *r.raw_integral << "\n";
    text << "  prefactor  : " << *r.prefactor << "\n";
  } else if (r.command == "darboux") {
    text << "darboux(n=" << r.n << ", i=" << r.integrand.i << ") = " << r.value << "\n";
    text << "  integral   : int_{Hilb^" << r.m << "(P^2)} " << to_string(r.integrand) << "\n";
  } else {
    text << "int_{Hilb^" << r.m << "(P^2)} " << to_string(r.integrand) << " = " << r.value << "\n";
  }
  const auto& s = r.integral.spec_used;
  const auto& c = r.integral.cross_check_spec;
  text << "  fixed pts  : " << r.integral.fixed_point_count << "\n";
  text << "  weights    : (w1, w2) = (" << s.w1 << ", " << s.w2 << "), cross-check (" << c.w1
       << ", " << c.w2 << "), seed " << s.seed << "\n";
  text << "  elapsed    : " << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms\n";
  if (!r.note.empty()) text << "  note       : " << r.note << "\n";
  return text.str();
}

void emit(const std::vector<Record>& records, const GlobalOptions& g, bool as_array,
          std::ostream& out) {
  switch (g.format) {
    case Format::Json: {
      if (as_array) {
        ordered_json array = ordered_json::array();
        for (const auto& r : records) array.push_back(record_json(r));
        out << array.dump(2) << "\n";
      } else {
        out << record_json(records.front()).dump(2) << "\n";
      }
      break;
    }
    case Format::Csv:
      out << kCsvHeader << "\n";
      for (const auto& r : records) out << record_csv(r) << "\n";
      break;
    case Format::Text:
      for (const auto& r : records) out << record_text(r);
      break;
  }
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

IntegrationConfig engine_config(const GlobalOptions& g) {
  IntegrationConfig config;
  config.seed = g.seed;
  config.threads = g.threads;
  return config;
}

constexpr const char* kUnvalidatedNote = "unvalidated against the published values (n > 6)";

Record donaldson_record(const DonaldsonResult& d, double elapsed_ms) {
  Record r;
  r.command = "donaldson";
  r.n = d.n;
  r.m = d.n + 1;
  r.integrand = d.integral.integrand;
  r.value = d.q;
  r.raw_integral = d.raw_integral;
  r.prefactor = d.prefactor;
  r.integral = d.integral;
  r.elapsed_ms = elapsed_ms;
  return r;
}

Record darboux_record(const DarbouxCount& d, double elapsed_ms) {
  Record r;
  r.command = "darboux";
  r.n = d.n;
  r.m = d.n + 1;
  r.integrand = d.integral.integrand;
  r.value = d.count;
  r.integral = d.integral;
  r.elapsed_ms = elapsed_ms;
  if (!d.validated_range) r.note = kUnvalidatedNote;
  return r;
}

std::string point_string(const ProjectivePoint& p) {
  return "[" + p[0].get_str() + ":" + p[1].get_str() + ":" + p[2].get_str() + "]";
}

int run_witness(int n, std::uint64_t seed, int samples, const GlobalOptions& g,
                std::ostream& out) {
  if (n < 2) throw OutOfRange("witness requires n >= 2, got n = " + std::to_string(n));
  if (samples < 1) throw OutOfRange("witness requires --samples >= 1");
  ordered_json rows = ordered_json::array();
  bool all_ok = true;
  if (g.format == Format::Csv) out << "n,sample,seed,degree,darboux,system_dimension\n";
  for (int s = 0; s < samples; ++s) {
    const std::uint64_t sample_seed = derive_seed(seed, static_cast<std::uint64_t>(s));
    const PlaneConfiguration config = sample_configuration(n, sample_seed);
    const HulsbergenDatum datum{config, sample_extension(n, sample_seed)};
    const PlaneCurve curve = barth_curve(datum).normalized();
    const bool incident = verify_darboux(config, curve);
    const int dimension = darboux_system_dimension(config);
    const bool ok = incident && curve.degree == n && dimension == n;
    all_ok = all_ok && ok;

    if (g.format == Format::Json) {
      ordered_json row;
      row["sample"] = s;
      row["seed"] = std::to_string(sample_seed);
      ordered_json pts = ordered_json::array();
      for (const auto& p : config.points()) {
        pts.push_back({p[0].get_str(), p[1].get_str(), p[2].get_str()});
      }
      row["points"] = pts;
      ordered_json ext = ordered_json::array();
      for (const auto& e : datum.extension) ext.push_back(e.get_str());
      row["extension"] = ext;
      ordered_json coefficients = ordered_json::array();
      for (const auto& c : curve.coefficients) coefficients.push_back(c.get_str());
      row["curve"] = {{"degree", curve.degree}, {"coefficients", coefficients}};
      row["darboux"] = incident;
      row["system_dimension"] = dimension;
      rows.push_back(row);
    } else if (g.format == Format::Csv) {
      out << n << ',' << s << ',' << sample_seed << ',' << curve.degree << ','
          << (incident ? "true" : "false") << ',' << dimension << "\n";
    } else {
      out << "sample " << s << " (seed " << sample_seed << "): points";
      for (const auto& p : config.points()) out << ' ' << point_string(p);
      out << "\n  curve degree " << curve.degree << ", through all "
          << config.nodes().size() << " nodes: " << (incident ? "yes" : "NO")
          << ", system dimension " << dimension << "\n";
    }
  }
  if (g.format == Format::Json) {
    ordered_json j;
    j["command"] = "witness";
    j["n"] = n;
    j["seed"] = std::to_string(seed);
    j["samples"] = rows;
    j["passed"] = all_ok;
    out << j.dump(2) << "\n";
  } else if (g.format == Format::Text) {
    out << (all_ok ? "all samples verified" : "VERIFICATION FAILED") << "\n";
  }
  return all_ok ? kExitOk : kExitComputation;
}

int run_verify(const GlobalOptions& g, std::ostream& out) {
  acceptance::Options options;
  options.seed = g.seed;
  options.parallel_threads = std::max(2u, g.threads == 1 ? 8u : g.threads);
  if (g.format == Format::Csv) out << "id,name,passed,elapsed_ms\n";
  const auto results = acceptance::run_all(options, [&](const acceptance::CriterionResult& r) {
    if (g.format == Format::Text) out << acceptance::format_line(r) << std::endl;
    if (g.format == Format::Csv) {
      out << r.id << ',' << r.name << ',' << (r.passed ? "true" : "false") << ','
          << std::fixed << std::setprecision(3) << r.elapsed_ms << "\n";
    }
  });
  bool all = true;
  ordered_json criteria = ordered_json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    criteria.push_back(
        {{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail},
         {"elapsed_ms", r.elapsed_ms}});
  }
  if (g.format == Format::Json) {
    out << ordered_json{{"command", "verify"}, {"passed", all}, {"criteria", criteria}}.dump(2)
        << "\n";
  } else if (g.format == Format::Text) {
    out << (all ? "all acceptance criteria passed" : "ACCEPTANCE FAILED") << "\n";
  }
  return all ? kExitOk : kExitComputation;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tautological integrals on Hilbert schemes of points of P^2: "
               "Donaldson invariants of CP^2 and Darboux configuration counts",
               "hilbdon"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  const std::map<std::string, Format> formats{
      {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  app.add_option("--format", g.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--threads", g.threads, "Worker threads for fixed-point summation")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--seed", g.seed, "Seed for weight specializations and samples");

  int n = 0;
  int i = 0;
  int m = 0;
  int n_max = 0;
  int samples = 1;
  std::string expr;

  auto* donaldson = app.add_subcommand("donaldson", "Donaldson coefficient q_{4n-3}, 2 <= n <= 6");
  donaldson->add_option("--n", n, "n (the invariant is q_{4n-3})")->required();

  auto* darboux = app.add_subcommand("darboux", "Count of Darboux configurations");
  darboux->add_option("--n", n, "Curve degree n >= 2")->required();
  darboux->add_option("--i", i, "Number of points on the polygon, 0 <= i <= 2n+2")->required();

  auto* integrate_cmd = app.add_subcommand("integrate", "Integrate an expression over Hilb^m(P^2)");
  integrate_cmd->add_option("--m", m, "Length m of the subschemes")->required();
  integrate_cmd->add_option("--expr", expr, "Integrand, e.g. \"c1(L)^3 * s3(E*L)\"")->required();

  auto* table = app.add_subcommand("table", "Donaldson and Darboux table up to n-max");
  table->add_option("--n-max", n_max, "Largest n, 2 <= n-max <= 6")->required();

  auto* witness = app.add_subcommand("witness", "Determinantal Barth curve witness");
  witness->add_option("--n", n, "Curve degree n >= 2")->required();
  std::optional<std::uint64_t> witness_seed;
  witness->add_option("--seed", witness_seed, "Sampling seed (defaults to the global seed)");
  witness->add_option("--samples", samples, "Number of sampled data");

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    if (*donaldson) {
      const auto result = donaldson_q(n, engine_config(g));
      emit({donaldson_record(result, elapsed_since(start))}, g, false, out);
      return kExitOk;
    }
    if (*darboux) {
      const auto result = darboux_count(n, i, engine_config(g));
      if (!result.validated_range) err << "note: " << kUnvalidatedNote << "\n";
      emit({darboux_record(result, elapsed_since(start))}, g, false, out);
      return kExitOk;
    }
    if (*integrate_cmd) {
      const IntegrandSpec spec = parse_integrand(expr);
      const auto result = integrate(m, spec, engine_config(g));
      Record r;
      r.command = "integrate";
      r.n = m - 1;
      r.m = m;
      r.integrand = spec;
      r.value = result.value;
      r.integral = result;
      r.elapsed_ms = elapsed_since(start);
      emit({r}, g, false, out);
      return kExitOk;
    }
    if (*table) {
      std::vector<Record> records;
      const auto result = invariant_table(n_max, engine_config(g));
      const double elapsed = elapsed_since(start);
      for (const auto& d : result.donaldson) records.push_back(donaldson_record(d, elapsed));
      for (const auto& d : result.darboux) records.push_back(darboux_record(d, elapsed));
      if (g.format == Format::Text) {
        out << "Donaldson coefficients\n";
        for (const auto& d : result.donaldson) {
          out << "  q_" << std::left << std::setw(3) << 4 * d.n - 3 << " = " << d.q
              << "   (" << d.prefactor << " * " << d.raw_integral << ")\n";
        }
        out << "Darboux counts  int_{Hilb^{n+1}} c1(L)^i s_{2n+2-i}(E*L)\n";
        for (const auto& d : result.darboux) {
          out << "  n=" << d.n << " i=" << std::left << std::setw(3) << d.i << std::right
              << std::setw(12) << d.count << "\n";
        }
      } else {
        emit(records, g, true, out);
      }
      return kExitOk;
    }
    if (*witness) return run_witness(n, witness_seed.value_or(g.seed), samples, g, out);
    if (*verify) return run_verify(g, out);
  } catch (const OutOfRange& e) {
    err << "error: OutOfRange: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DegreeMismatch& e) {
    err << "error: DegreeMismatch: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  } catch (const std::invalid_argument& e) {
    err << "error: invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitUsage;
}

}  // namespace hilb::cli
