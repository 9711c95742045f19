#include "fermat4/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fermat4/elliptic.hpp"
#include "fermat4/frey.hpp"
#include "fermat4/newforms.hpp"
#include "fermat4/obstruction.hpp"
#include "fermat4/search.hpp"
#include "fermat4/two_squares.hpp"

namespace fermat4::cli {

namespace {

using json = nlohmann::json;
using obstruction::int_json;

Int parse_int(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    throw DomainError("not an integer: '" + s + "'");
  }
}

std::vector<Int> parse_int_list(const std::string& s) {
  std::vector<Int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_int(tok));
  if (out.empty()) throw DomainError("empty list: '" + s + "'");
  return out;
}

json rt2_json(const Rt2Int& x) { return {{"rat", int_json(x.rat)}, {"irr", int_json(x.irr)}}; }

// Eigenvalue rendering with the sign caveat for magnitudes.
std::string eig_str(const Rt2Int& v, bool sign_determined) {
  if (sign_determined || v.is_zero()) return to_string(v);
  return "+-" + to_string(v);
}

struct TableColumns {
  std::vector<std::vector<std::string>> rows;

  void print(std::ostream& out) const {
    std::vector<size_t> width;
    for (const auto& row : rows)
      for (size_t i = 0; i < row.size(); ++i) {
        if (width.size() <= i) width.resize(i + 1, 0);
        width[i] = std::max(width[i], row[i].size());
      }
    for (const auto& row : rows) {
      for (size_t i = 0; i < row.size(); ++i) {
        out << row[i];
        if (i + 1 < row.size())
          out << std::string(width[i] - row[i].size() + 2, ' ');
      }
      out << "\n";
    }
  }
};

int cmd_newforms_table(bool verify, const Int& max_prime, bool as_json, std::ostream& out) {
  const auto& forms = newforms::all();

  std::vector<std::string> mismatches;
  if (verify) {
    for (const auto& f : forms)
      for (size_t i = 0; i < newforms::kTablePrimes.size(); ++i) {
        const Int q(newforms::kTablePrimes[i]);
        auto got = newforms::eigenvalue(f, q);
        const Rt2Int& want = f.table[i];
        const bool ok = got.sign_determined
                            ? got.value == want
                            : got.value.rat == want.rat && got.value.irr == abs(want.irr);
        if (!ok)
          mismatches.push_back(f.label + " at q = " + q.get_str() + ": table " +
                               to_string(want) + ", computed " +
                               eig_str(got.value, got.sign_determined));
      }
  }

  std::vector<Int> extra_primes;
  if (max_prime > 0)
    for (Int q = 19; q <= max_prime; ++q)
      if (is_prime(q)) extra_primes.push_back(q);

  if (as_json) {
    json jforms = json::array();
    for (const auto& f : forms) {
      json eig = json::object();
      for (size_t i = 0; i < newforms::kTablePrimes.size(); ++i)
        eig[std::to_string(newforms::kTablePrimes[i])] = rt2_json(f.table[i]);
      for (const Int& q : extra_primes) {
        auto got = newforms::eigenvalue(f, q);
        json e = rt2_json(got.value);
        e["sign_determined"] = got.sign_determined;
        eig[q.get_str()] = e;
      }
      jforms.push_back({{"label", f.label},
                        {"level", f.level},
                        {"cm_disc", static_cast<int>(f.cm)},
                        {"eigenvalues", eig}});
    }
    json j{{"forms", jforms}};
    if (verify) {
      j["verified"] = mismatches.empty();
      j["mismatches"] = mismatches;
    }
    out << j.dump(2) << "\n";
    return verify && !mismatches.empty() ? 1 : 0;
  }

  TableColumns t;
  std::vector<std::string> head{"label", "level", "cm"};
  for (int p : newforms::kTablePrimes) head.push_back("a" + std::to_string(p));
  for (const Int& q : extra_primes) head.push_back("a" + q.get_str());
  t.rows.push_back(head);
  for (const auto& f : forms) {
    std::vector<std::string> row{f.label, std::to_string(f.level),
                                 std::to_string(static_cast<int>(f.cm))};
    for (const auto& e : f.table) row.push_back(to_string(e));
    for (const Int& q : extra_primes) {
      auto got = newforms::eigenvalue(f, q);
      row.push_back(eig_str(got.value, got.sign_determined));
    }
    t.rows.push_back(row);
  }
  t.print(out);
  if (verify) {
    if (mismatches.empty()) {
      out << "verified: all " << forms.size() * newforms::kTablePrimes.size()
          << " table eigenvalues match the models (f2 inert entries up to sign)\n";
    } else {
      for (const auto& m : mismatches) out << "MISMATCH: " << m << "\n";
      return 1;
    }
  }
  return 0;
}

int cmd_frey_trace(const std::string& variant_str, const Int& A, const Int& B, const Int& q,
                   bool as_json, std::ostream& out) {
  frey::Variant variant;
  if (variant_str == "AB")
    variant = frey::Variant::AB;
  else if (variant_str == "BA")
    variant = frey::Variant::BA;
  else
    throw DomainError("variant must be AB or BA, got '" + variant_str + "'");

  auto curve = frey::build_frey(A, B, variant);
  Rt2Int value;
  bool sign_determined = true;
  if (q == 2) throw DomainError("traces at q = 2 are not defined here");
  if (q % 4 == 3) {
    auto t = frey::trace_inert(curve.curve, q);
    value = t.value;
    sign_determined = t.sign_determined;
  } else {
    value = Rt2Int{frey::trace_split(curve.curve, q), 0};
  }

  const std::string curve_name =
      std::string("E_{") + (variant == frey::Variant::AB ? "A,B" : "B,A") + "}";
  if (as_json) {
    out << json{{"variant", variant_str},
                {"A", int_json(A)},
                {"B", int_json(B)},
                {"q", int_json(q)},
                {"value", rt2_json(value)},
                {"sign_determined", sign_determined}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << curve_name << " with (A, B) = (" << A.get_str() << ", " << B.get_str()
      << "): a_" << q.get_str() << " = " << eig_str(value, sign_determined);
  if (!sign_determined) out << " (sign undetermined)";
  out << "\n";
  return 0;
}

int cmd_a3_table(bool as_json, std::ostream& out) {
  const auto& table = frey::a3_table();
  if (as_json) {
    json classes = json::array();
    for (const auto& [cls, entry] : table)
      classes.push_back({{"a_mod_3", cls.first},
                         {"b_mod_3", cls.second},
                         {"ab", rt2_json(entry.ab.value)},
                         {"ba", rt2_json(entry.ba.value)}});
    out << json{{"classes", classes}}.dump(2) << "\n";
    return 0;
  }
  TableColumns t;
  t.rows.push_back({"A%3", "B%3", "|a3(E_{A,B})|", "|a3(E_{B,A})|"});
  for (const auto& [cls, entry] : table)
    t.rows.push_back({std::to_string(cls.first), std::to_string(cls.second),
                      to_string(entry.ab.value), to_string(entry.ba.value)});
  t.print(out);
  out << "a3(E_{A,B}) = 0 exactly on the classes with A = 0 (mod 3); there "
         "|a3(E_{B,A})| = 2*rt2\n";
  return 0;
}

void print_report_text(const obstruction::VerdictReport& r, std::ostream& out) {
  out << obstruction::to_string(r.target) << " p = " << r.p.get_str() << "\n";
  for (const auto& s : r.steps) {
    out << "  " << (s.kind == obstruction::StepKind::Computed ? "computed" : "axiom   ")
        << "  " << s.label;
    if (s.kind == obstruction::StepKind::Computed)
      out << " " << s.inputs.dump() << " -> " << s.outputs.dump();
    out << "\n            " << s.statement << "\n";
  }
  out << "verdict: " << obstruction::to_string(r.verdict) << "\n";
}

int cmd_verdict(bool theorem1, const Int& p, const std::vector<Int>& range, bool as_json,
                std::ostream& out) {
  auto run_one = [&](const Int& prime) {
    return theorem1 ? obstruction::theorem1_verdict(prime)
                    : obstruction::theorem2_verdict(prime);
  };
  if (range.empty()) {
    auto r = run_one(p);
    if (as_json)
      out << r.to_json().dump(2) << "\n";
    else
      print_report_text(r, out);
    return 0;
  }

  json jreports = json::array();
  bool first = true;
  for (Int prime = range[0]; prime <= range[1]; ++prime) {
    if (!is_prime(prime)) continue;
    auto r = run_one(prime);
    if (as_json) {
      jreports.push_back(r.to_json());
    } else {
      if (!first) out << "\n";
      print_report_text(r, out);
      first = false;
    }
  }
  if (as_json) out << jreports.dump(2) << "\n";
  return 0;
}

int cmd_analyze_q(const Int& q, const Int& p, bool as_json, std::ostream& out) {
  auto a = obstruction::first_case_constraint(q, p);
  if (as_json) {
    out << json{{"q", int_json(a.q)},
                {"p", int_json(a.p)},
                {"branch", obstruction::to_string(a.branch)},
                {"alpha", int_json(a.decomposition.alpha)},
                {"beta", int_json(a.decomposition.beta)},
                {"alpha_sq_is_1", a.alpha_sq_is_1},
                {"p_divides_beta", a.p_divides_beta}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << "q = " << q.get_str() << " = " << a.decomposition.alpha.get_str() << "^2 + "
      << a.decomposition.beta.get_str() << "^2 (alpha odd, beta even)\n";
  out << "q mod p = " << Int(q % p).get_str() << ", branch: "
      << obstruction::to_string(a.branch) << "\n";
  out << "alpha^2 = 1 (mod p): " << (a.alpha_sq_is_1 ? "yes" : "no")
      << "; p | beta: " << (a.p_divides_beta ? "yes" : "no") << "\n";
  return 0;
}

int cmd_two_squares(const Int& n, bool all, bool as_json, std::ostream& out) {
  auto reps = two_squares::all_representations(n);
  if (as_json) {
    json jreps = json::array();
    for (const auto& r : reps)
      if (all || &r == &reps.front())
        jreps.push_back({{"alpha", int_json(r.alpha)}, {"beta", int_json(r.beta)}});
    out << json{{"n", int_json(n)}, {"count", reps.size()}, {"representations", jreps}}
               .dump(2)
        << "\n";
    return 0;
  }
  if (reps.empty()) {
    out << n.get_str() << " is not a sum of two squares\n";
    return 0;
  }
  if (!all) {
    const auto& r = reps.front();
    out << n.get_str() << " = " << r.alpha.get_str() << "^2 + " << r.beta.get_str()
        << "^2\n";
    return 0;
  }
  out << n.get_str() << " has " << reps.size() << " representation"
      << (reps.size() == 1 ? "" : "s") << ":\n";
  for (const auto& r : reps)
    out << "  " << r.alpha.get_str() << "^2 + " << r.beta.get_str() << "^2\n";
  return 0;
}

int cmd_search(const Int& max_ab, const std::vector<Int>& primes, bool as_json,
               std::ostream& out) {
  auto report = search::search_solutions(max_ab, primes);
  if (as_json) {
    json jsol = json::array();
    for (const auto& s : report.solutions)
      jsol.push_back({{"A", int_json(s.A)},
                      {"B", int_json(s.B)},
                      {"root", int_json(s.root)},
                      {"p", int_json(s.p)}});
    json jp = json::array();
    for (const auto& p : report.primes) jp.push_back(int_json(p));
    out << json{{"max_ab", int_json(report.max_ab)},
                {"pairs_scanned", int_json(report.pairs_scanned)},
                {"primes", jp},
                {"solutions", jsol}}
               .dump(2)
        << "\n";
  } else {
    out << "searched " << report.pairs_scanned.get_str()
        << " coprime pairs 1 <= B <= A <= " << max_ab.get_str() << " for A^4 + B^4 "
           "= z^p, p in {";
    for (size_t i = 0; i < primes.size(); ++i)
      out << (i ? ", " : "") << primes[i].get_str();
    out << "}\n";
    if (report.solutions.empty()) {
      out << "no solutions\n";
    } else {
      for (const auto& s : report.solutions)
        out << "SOLUTION: " << s.A.get_str() << "^4 + " << s.B.get_str() << "^4 = "
            << s.root.get_str() << "^" << s.p.get_str() << "\n";
    }
  }
  return report.solutions.empty() ? 0 : 1;
}

int cmd_side_claims(const Int& max_ab, bool as_json, std::ostream& out) {
  auto report = search::verify_side_claims(max_ab);
  if (as_json) {
    json jv = json::array();
    for (const auto& v : report.violations)
      jv.push_back({{"A", int_json(v.A)},
                    {"B", int_json(v.B)},
                    {"n", int_json(v.n)},
                    {"claim", v.claim}});
    out << json{{"max_ab", int_json(report.max_ab)},
                {"pairs_scanned", int_json(report.pairs_scanned)},
                {"violations", jv}}
               .dump(2)
        << "\n";
  } else {
    if (report.violations.empty()) {
      out << "side claims hold for all " << report.pairs_scanned.get_str()
          << " primitive pairs with A even, B odd, A, B <= " << max_ab.get_str()
          << ": gcd(A^4 + B^4, 6) = 1 and every prime factor is 1 (mod 4)\n";
    } else {
      for (const auto& v : report.violations)
        out << "VIOLATION at (A, B) = (" << v.A.get_str() << ", " << v.B.get_str()
            << "): " << v.claim << "\n";
    }
  }
  return report.violations.empty() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"verifier for the modular obstruction to x^4 + y^4 = z^p"};
  app.name("fermat4");
  app.require_subcommand(1);

  bool as_json = false;
  std::string cache_path;
  app.add_flag("--json", as_json, "emit JSON instead of text");
  app.add_option("--cache", cache_path, "point-count cache file to load and update");

  auto* nf = app.add_subcommand("newforms", "the six CM newforms of levels 32 and 256");
  auto* nf_table = nf->add_subcommand("table", "print the eigenvalue table");
  bool nf_verify = false;
  std::string nf_max_prime = "0";
  nf_table->add_flag("--verify", nf_verify, "recompute every entry from the curve models");
  nf_table->add_option("--max-prime", nf_max_prime,
                       "also print computed eigenvalues for primes up to this bound");
  nf->require_subcommand(1);

  auto* ft = app.add_subcommand("frey", "the Frey curves E_{A,B} and E_{B,A}");
  auto* ft_trace = ft->add_subcommand("trace", "trace of Frobenius at a prime q");
  std::string ft_variant, ft_a, ft_b, ft_q;
  ft_trace->add_option("--variant", ft_variant, "AB or BA")->required();
  ft_trace->add_option("--A", ft_a, "first parameter")->required();
  ft_trace->add_option("--B", ft_b, "second parameter")->required();
  ft_trace->add_option("--q", ft_q, "odd prime of good reduction")->required();
  ft->require_subcommand(1);

  auto* a3 = app.add_subcommand("a3-table",
                                "|a_3| for both curves on each class (A, B) mod 3");

  auto* verdict = app.add_subcommand("verdict", "run an obstruction chain");
  auto* v1 = verdict->add_subcommand("theorem1", "full non-existence verdict");
  auto* v2 = verdict->add_subcommand("first-case", "First Case verdict");
  std::string v1_p, v2_p;
  std::vector<std::string> v1_range, v2_range;
  v1->add_option("--p", v1_p, "prime exponent");
  v1->add_option("--range", v1_range, "inclusive prime range LO HI")->expected(2);
  v2->add_option("--p", v2_p, "prime exponent");
  v2->add_option("--range", v2_range, "inclusive prime range LO HI")->expected(2);
  verdict->require_subcommand(1);

  auto* aq = app.add_subcommand("analyze-q",
                                "First Case constraint at a prime q dividing C");
  std::string aq_q, aq_p;
  aq->add_option("--q", aq_q, "prime q = 1 (mod 4)")->required();
  aq->add_option("--p", aq_p, "prime p = 3 (mod 4)")->required();

  auto* ts = app.add_subcommand("two-squares", "write N as a sum of two squares");
  std::string ts_n;
  bool ts_all = false;
  ts->add_option("N", ts_n, "integer >= 1")->required();
  ts->add_flag("--all", ts_all, "list every representation");

  auto* se = app.add_subcommand("search", "exhaustive search for A^4 + B^4 = z^p");
  std::string se_max = "200", se_primes = "5,7,11,13";
  se->add_option("--max-ab", se_max, "bound on A (default 200)");
  se->add_option("--primes", se_primes, "comma-separated odd primes (default 5,7,11,13)");

  auto* sc = app.add_subcommand("side-claims",
                                "verify the arithmetic side claims on A^4 + B^4");
  std::string sc_max = "50";
  sc->add_option("--max-ab", sc_max, "bound on A and B (default 50)");

  std::vector<const char*> argv;
  argv.push_back("fermat4");
  for (const auto& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  elliptic::PointCountCache cache;
  const bool use_cache = !cache_path.empty();
  if (use_cache) {
    cache.load(cache_path);
    elliptic::set_point_count_cache(&cache);
  }

  int rc = 2;
  try {
    if (nf_table->parsed()) {
      rc = cmd_newforms_table(nf_verify, parse_int(nf_max_prime), as_json, out);
    } else if (ft_trace->parsed()) {
      rc = cmd_frey_trace(ft_variant, parse_int(ft_a), parse_int(ft_b), parse_int(ft_q),
                          as_json, out);
    } else if (a3->parsed()) {
      rc = cmd_a3_table(as_json, out);
    } else if (v1->parsed() || v2->parsed()) {
      const bool is_t1 = v1->parsed();
      const std::string& p_str = is_t1 ? v1_p : v2_p;
      const auto& range_str = is_t1 ? v1_range : v2_range;
      if (p_str.empty() == range_str.empty())
        throw DomainError("give exactly one of --p or --range");
      std::vector<Int> range;
      for (const auto& s : range_str) range.push_back(parse_int(s));
      rc = cmd_verdict(is_t1, p_str.empty() ? Int(0) : parse_int(p_str), range, as_json,
                       out);
    } else if (aq->parsed()) {
      rc = cmd_analyze_q(parse_int(aq_q), parse_int(aq_p), as_json, out);
    } else if (ts->parsed()) {
      rc = cmd_two_squares(parse_int(ts_n), ts_all, as_json, out);
    } else if (se->parsed()) {
      rc = cmd_search(parse_int(se_max), parse_int_list(se_primes), as_json, out);
    } else if (sc->parsed()) {
      rc = cmd_side_claims(parse_int(sc_max), as_json, out);
    }
  } catch (const LawViolationError& e) {
    err << "verification failure: " << e.what() << "\n";
    rc = 1;
  } catch (const ConjugacyViolationError& e) {
    err << "verification failure: " << e.what() << "\n";
    rc = 1;
  } catch (const StructureViolationError& e) {
    err << "verification failure: " << e.what() << "\n";
    rc = 1;
  } catch (const ModelUnavailableError& e) {
    err << "verification failure: " << e.what() << "\n";
    rc = 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    rc = 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    rc = 2;
  }

  if (use_cache) {
    elliptic::set_point_count_cache(nullptr);
    cache.save(cache_path);
  }
  return rc;
}

}  // namespace fermat4::cli
