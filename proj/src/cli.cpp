#include "fpure/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "fpure/corpus.hpp"
#include "fpure/diffops.hpp"
#include "fpure/errors.hpp"
#include "fpure/experiments.hpp"
#include "fpure/invariants.hpp"
#include "fpure/report.hpp"
#include "fpure/suites.hpp"

namespace fpure {
namespace {

namespace fs = std::filesystem;

struct Job {
  std::string command;
  std::uint32_t p = 0;
  std::vector<std::string> vars;
  std::string monomial_order = "degrevlex";
  std::vector<std::string> gens;
  unsigned e = 1;
  std::vector<std::string> prime;
  bool json = false;
  unsigned jobs = 1;
  std::uint64_t budget = 0;
  std::string cache_dir;
  std::string file;
  std::string method = "auto";
  bool global = false;
  std::string poly;
  std::uint64_t order = 0;
  std::vector<std::uint32_t> alpha;
  std::string suite;
  std::string corpus = "builtin";
  bool allow_nonminimal = false;
  bool verbose = false;
};

std::string trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t at = s.find(sep, start);
    std::string piece = trim(s.substr(start, at == std::string_view::npos ? at : at - start));
    if (!piece.empty()) out.push_back(piece);
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

std::string unquote(std::string s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return s;
}

/// Flat key-value file: p = 3, vars = x,y,z, gens = "f1"; "f2", prime, e, order.
void load_job_file(const std::string& path, Job& job, const std::set<std::string>& given) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read input file '" + path + "'");
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InputError(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    auto number = [&](const std::string& v) -> std::uint64_t {
      try {
        std::size_t used = 0;
        std::uint64_t n = std::stoull(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return n;
      } catch (const std::exception&) {
        throw InputError(path + ":" + std::to_string(lineno) + ": '" + key + "' needs an integer");
      }
    };
    if (key == "p") {
      if (!given.count("p")) job.p = static_cast<std::uint32_t>(number(value));
    } else if (key == "vars") {
      if (!given.count("vars")) job.vars = split(value, ',');
    } else if (key == "gens" || key == "ideal") {
      if (!given.count("ideal"))
        for (const std::string& g : split(value, ';')) job.gens.push_back(unquote(g));
    } else if (key == "prime") {
      if (!given.count("prime"))
        for (const std::string& g : split(value, ';')) job.prime.push_back(unquote(g));
    } else if (key == "e" || key == "emax") {
      if (!given.count("emax")) job.e = static_cast<unsigned>(number(value));
    } else if (key == "order") {
      if (!given.count("monomial-order")) job.monomial_order = value;
    } else {
      throw InputError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

struct Context {
  Job job;
  Ring ring;
  Ideal ideal;
};

Json ring_json(const Context& c) {
  return {{"p", c.job.p}, {"vars", c.ring->names()}, {"order", to_string(c.ring->order())}};
}

Json ideal_json(const Ideal& I) {
  Json gens = Json::array();
  for (const Polynomial& g : I.generators()) gens.push_back(g.to_string());
  return gens;
}

Ideal parse_prime(const Context& c) {
  std::vector<std::string> gens;
  for (const std::string& item : c.job.prime)
    for (const std::string& g : split(item, ',')) gens.push_back(g);
  return Ideal::parse(c.ring, gens);
}

/// Evaluates f(e) for e = 1..e_max on up to `jobs` threads, preserving order.
template <class T, class F>
std::vector<T> map_levels(unsigned e_max, unsigned jobs, F f) {
  std::vector<std::optional<T>> slots(e_max);
  std::atomic<unsigned> next{0};
  std::exception_ptr failure;
  std::mutex m;
  auto worker = [&] {
    for (unsigned k; (k = next++) < e_max;) {
      try {
        slots[k] = f(k + 1);
      } catch (...) {
        std::lock_guard lock(m);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < std::min(jobs, e_max); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  std::vector<T> out;
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

int cmd_fedder(const Context& c, std::ostream& out, std::ostream& err) {
  FedderWitness w = is_fpure_at_origin(c.ideal, c.job.e);
  if (!w.inside_m_squared)
    err << "warning: ideal is not inside m^2; mfpt is not meaningful for this presentation\n";
  if (c.job.json) {
    Json j = to_json(w, c.ring);
    j["command"] = "fedder";
    j["ring"] = ring_json(c);
    j["ideal"] = ideal_json(c.ideal);
    out << j.dump(2) << "\n";
  } else {
    out << "F-pure: " << (w.fpure ? "true" : "false") << "\n";
    out << "e: " << w.e << "  q: " << w.q << "\n";
    if (w.witness_monomial)
      out << "witness monomial: " << monomial_to_string(*w.witness_monomial, c.ring) << "\n";
    out << "colon generators: " << w.colon_generators.size() << "\n";
    if (c.job.verbose)
      for (const Polynomial& g : w.colon_generators) out << "  " << g.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_theta(const Context& c, std::ostream& out, std::ostream&) {
  ThetaMethod method = ThetaMethod::kAuto;
  if (c.job.method == "generic") method = ThetaMethod::kGeneric;
  else if (c.job.method == "hypersurface") method = ThetaMethod::kHypersurface;
  else if (c.job.method != "auto") throw InputError("unknown method '" + c.job.method + "'");

  std::string scope = "origin";
  std::optional<Ideal> prime;
  if (!c.job.prime.empty()) {
    prime = parse_prime(c);
    scope = "prime";
  }
  if (c.job.global) scope = "global";
  auto values = map_levels<ThetaValue>(c.job.e, c.job.jobs, [&](unsigned e) -> ThetaValue {
    if (c.job.global) return theta_global(c.ideal, e);
    if (prime) return theta_at_prime(c.ideal, *prime, e);
    return theta_local(c.ideal, e, method);
  });
  bool sentinel = false;
  Json levels = Json::array();
  for (unsigned e = 1; e <= c.job.e; ++e) {
    const ThetaValue& t = values[e - 1];
    sentinel = sentinel || !t;
    const std::uint64_t q = power_of_p(c.job.p, e);
    if (c.job.json)
      levels.push_back({{"e", e}, {"q", q}, {"theta", to_json(t)}});
    else
      out << "e=" << e << " q=" << q << " theta=" << (t ? std::to_string(*t) : "NOT_FPURE") << "\n";
  }
  if (c.job.json) {
    Json j{{"command", "theta"}, {"ring", ring_json(c)}, {"ideal", ideal_json(c.ideal)},
           {"scope", scope}, {"levels", levels}};
    if (prime) j["prime"] = ideal_json(*prime);
    if (scope == "origin") j["method"] = c.job.method;
    j["formula"] = scope == "global"
                       ? "largest n with (D^(n-1, q)(I^[q]:I)) proper"
                       : scope == "prime" ? "largest n with I^[q]:I inside P^<n,q>"
                                          : "min degree of a monomial with exponents < q in I^[q]:I";
    out << j.dump(2) << "\n";
  }
  return sentinel ? kExitSentinel : kExitOk;
}

int cmd_fpt(const Context& c, std::ostream& out, std::ostream&) {
  FptOptions options;
  options.require_minimal = !c.job.allow_nonminimal;
  auto reports = map_levels<InvariantReport>(
      c.job.e, c.job.jobs, [&](unsigned e) { return fpt_bounds(c.ideal, e, options); });
  if (c.job.json) {
    Json arr = Json::array();
    for (const InvariantReport& r : reports) arr.push_back(to_json(r));
    Json j{{"command", "fpt"}, {"ring", ring_json(c)}, {"ideal", ideal_json(c.ideal)},
           {"reports", arr}};
    out << j.dump(2) << "\n";
  } else {
    for (const InvariantReport& r : reports) out << render_text(r);
  }
  return kExitOk;
}

int cmd_strata(const Context& c, std::ostream& out, std::ostream&) {
  std::vector<unsigned> levels;
  for (unsigned e = 1; e <= c.job.e; ++e) levels.push_back(e);
  auto strata = stratify_monomial(c.ideal, levels, c.job.jobs);
  auto bad = semicontinuity_violations(strata);
  if (c.job.json) {
    Json arr = Json::array();
    for (const StratumRecord& s : strata) arr.push_back(to_json(s));
    Json j{{"command", "dfpt-strata"}, {"ring", ring_json(c)}, {"ideal", ideal_json(c.ideal)},
           {"restriction", "monomial primes only"}, {"strata", arr},
           {"semicontinuity_violations", bad.size()}};
    out << j.dump(2) << "\n";
  } else {
    out << render_table(strata);
    out << "semicontinuity violations: " << bad.size() << "\n";
  }
  return kExitOk;
}

int cmd_diffpow(const Context& c, std::ostream& out, std::ostream&) {
  if (c.job.poly.empty()) throw InputError("diffpow needs --poly");
  Polynomial f = parse_poly(c.job.poly, c.ring);
  Json j{{"command", "diffpow"}, {"ring", ring_json(c)}, {"poly", f.to_string()}, {"e", c.job.e}};
  if (!c.job.alpha.empty()) {
    Polynomial image = apply_divided_power(DividedPowerIndex{c.job.alpha, c.job.e}, f);
    j["alpha"] = c.job.alpha;
    j["image"] = image.to_string();
    if (!c.job.json) out << "image: " << image.to_string() << "\n";
  }
  if (c.job.order > 0) {
    Ideal P = c.job.prime.empty() ? Ideal::maximal(c.ring) : parse_prime(c);
    bool member = diff_power_member(f, P, c.job.order, c.job.e);
    j["order"] = c.job.order;
    j["prime"] = ideal_json(P);
    j["member"] = member;
    if (!c.job.json) out << "member: " << (member ? "true" : "false") << "\n";
  }
  if (c.job.alpha.empty() && c.job.order == 0) throw InputError("diffpow needs --order or --alpha");
  if (c.job.json) out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_check(const Context& c, std::ostream& out, std::ostream&) {
  if (c.job.corpus != "builtin") throw InputError("unknown corpus '" + c.job.corpus + "'");
  std::vector<std::string> names;
  if (c.job.suite.empty() || c.job.suite == "all")
    names = suite_names();
  else
    names = split(c.job.suite, ',');
  const auto corpus = builtin_corpus();
  std::size_t failures = 0;
  Json suites = Json::array();
  for (const std::string& name : names) {
    SuiteResult r = run_suite(name, corpus, c.job.jobs);
    failures += r.failures();
    if (c.job.json) {
      Json cases = Json::array();
      for (const CaseResult& k : r.cases)
        cases.push_back({{"label", k.label}, {"passed", k.passed}, {"detail", k.detail}});
      suites.push_back({{"suite", r.name}, {"cases", cases}, {"failures", r.failures()}});
    } else {
      for (const CaseResult& k : r.cases)
        if (!k.passed || c.job.verbose)
          out << (k.passed ? "  pass " : "  FAIL ") << k.label << ": " << k.detail << "\n";
      out << "suite " << r.name << ": " << r.cases.size() - r.failures() << "/" << r.cases.size()
          << " passed\n";
    }
  }
  if (c.job.json)
    out << Json{{"command", "check"}, {"corpus", c.job.corpus}, {"suites", suites},
                {"failures", failures}}
               .dump(2)
        << "\n";
  return failures ? kExitSentinel : kExitOk;
}

int cmd_signature(const Context& c, std::ostream& out, std::ostream&) {
  auto terms = fsignature_estimate(c.ideal, c.job.e);
  Json arr = Json::array();
  for (const SignatureTerm& t : terms) {
    if (c.job.json)
      arr.push_back({{"e", t.e}, {"q", t.q},
                     {"colength", t.colength ? Json(*t.colength) : Json(nullptr)},
                     {"value", to_string(t.value)}, {"finite", t.colength.has_value()}});
    else
      out << "e=" << t.e << " q=" << t.q << " colength="
          << (t.colength ? std::to_string(*t.colength) : "infinite") << " s=" << to_string(t.value)
          << "\n";
  }
  if (c.job.json)
    out << Json{{"command", "signature"}, {"ring", ring_json(c)}, {"ideal", ideal_json(c.ideal)},
                {"terms", arr}, {"formula", "colength(S / (m^[q] : (I^[q]:I))) / q^dim(R)"}}
               .dump(2)
        << "\n";
  return kExitOk;
}

/// Canonical description of everything that determines the output.
std::string canonical_job(const Context& c) {
  Json j;
  j["command"] = c.job.command;
  j["json"] = c.job.json;
  j["verbose"] = c.job.verbose;
  if (c.job.command == "check") {
    j["suite"] = c.job.suite;
    j["corpus"] = c.job.corpus;
    return j.dump();
  }
  j["ring"] = ring_json(c);
  j["ideal"] = ideal_json(c.ideal);
  j["e"] = c.job.e;
  j["prime"] = c.job.prime;
  j["method"] = c.job.method;
  j["global"] = c.job.global;
  j["poly"] = c.job.poly;
  j["order"] = c.job.order;
  j["alpha"] = c.job.alpha;
  j["allow_nonminimal"] = c.job.allow_nonminimal;
  return j.dump();
}

struct CacheEntry {
  int exit = 0;
  std::string out;
  std::string err;
};

std::optional<CacheEntry> cache_load(const fs::path& file, const std::string& key,
                                     std::ostream& err) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    Json j = Json::parse(buf.str());
    if (j.at("key").get<std::string>() != key) throw std::runtime_error("key mismatch");
    return CacheEntry{j.at("exit").get<int>(), j.at("stdout").get<std::string>(),
                      j.at("stderr").get<std::string>()};
  } catch (const std::exception&) {
    err << "warning: cache entry " << file.string() << " is corrupted; recomputing\n";
    return std::nullopt;
  }
}

void cache_store(const fs::path& file, const std::string& key, const CacheEntry& e,
                 std::ostream& err) {
  std::error_code ec;
  fs::create_directories(file.parent_path(), ec);
  fs::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
    if (!o) {
      err << "warning: cannot write cache entry " << file.string() << "\n";
      return;
    }
    o << Json{{"key", key}, {"exit", e.exit}, {"stdout", e.out}, {"stderr", e.err}}.dump();
  }
  fs::rename(tmp, file, ec);
  if (ec) err << "warning: cannot write cache entry " << file.string() << "\n";
}

void report_error(const Job& job, std::ostream& err, const char* kind, const std::string& message,
                  int code) {
  if (job.json)
    err << Json{{"error", {{"kind", kind}, {"message", message}}}, {"exit", code}}.dump() << "\n";
  else
    err << "error: " << message << "\n";
}

void add_common_options(CLI::App* sub, Job& job, bool ring_options) {
  if (ring_options) {
    sub->add_option("-p", job.p, "characteristic (prime below 2^31)");
    sub->add_option("-v,--vars", job.vars, "comma-separated variable names")->delimiter(',');
    sub->add_option("-i,--ideal", job.gens, "ideal generator (repeatable)");
    sub->add_option("--monomial-order", job.monomial_order, "degrevlex, deglex or lex");
    sub->add_option("--file", job.file, "key-value input file");
    sub->add_option("--prime", job.prime, "prime ideal: variables or generators, comma-separated");
  }
  sub->add_option("-e,--emax", job.e, "Frobenius level (multi-level commands run 1..e)");
  sub->add_flag("--json", job.json, "emit JSON");
  sub->add_option("--jobs", job.jobs, "worker threads");
  sub->add_option("--budget", job.budget, "S-pair budget per Groebner basis");
  sub->add_option("--cache-dir", job.cache_dir, "replay cache directory");
  sub->add_flag("--verbose", job.verbose, "print more detail");
}

}  // namespace

std::uint64_t fnv1a64(std::string_view data) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Job job;
  CLI::App app{"Exact F-purity and F-pure threshold invariants over F_p", "fpure"};
  app.require_subcommand(1);
  struct Command {
    const char* name;
    const char* help;
    bool ring;
  };
  const std::vector<Command> commands = {
      {"fedder", "Fedder's criterion at the origin", true},
      {"theta", "Theta_e at the origin, at a prime (--prime) or globally (--global)", true},
      {"fpt", "certified fpt, dfpt and mfpt intervals for e = 1..emax", true},
      {"dfpt-strata", "stratify a squarefree monomial ideal over monomial primes", true},
      {"diffpow", "divided-power operators and differential-power membership", true},
      {"check", "run property suites over a corpus", false},
      {"signature", "F-signature estimates for e = 1..emax", true},
  };
  for (const Command& cmd : commands) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    add_common_options(sub, job, cmd.ring);
    std::string name = cmd.name;
    sub->callback([&job, name] { job.command = name; });
    if (name == "theta") {
      sub->add_option("--method", job.method, "auto, generic or hypersurface");
      sub->add_flag("--global", job.global, "global Theta_e via operator images");
    } else if (name == "fpt") {
      sub->add_flag("--allow-nonminimal", job.allow_nonminimal,
                    "accept generators of order 1 (mfpt is then omitted)");
    } else if (name == "diffpow") {
      sub->add_option("--poly", job.poly, "polynomial to test");
      sub->add_option("--order", job.order, "n: test membership in P^<n,q>");
      sub->add_option("--alpha", job.alpha, "apply d^(alpha), comma-separated")->delimiter(',');
    } else if (name == "check") {
      sub->add_option("--suite", job.suite, "suite name, comma list, or all");
      sub->add_option("--corpus", job.corpus, "corpus name (builtin)");
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    job.json = std::find(args.begin(), args.end(), "--json") != args.end();
    report_error(job, err, "usage", e.what(), kExitInput);
    return kExitInput;
  }

  struct BudgetRestore {
    std::uint64_t saved = pair_budget();
    ~BudgetRestore() { set_pair_budget(saved); }
  } restore;

  try {
    if (job.e < 1) throw InputError("level e must be at least 1");
    if (job.jobs < 1) job.jobs = 1;
    if (job.budget > 0) set_pair_budget(job.budget);

    Context ctx;
    if (job.command != "check") {
      if (!job.file.empty()) {
        std::set<std::string> given;
        for (const char* key : {"p", "vars", "ideal", "prime", "emax", "monomial-order"}) {
          CLI::App* sub = app.get_subcommand(job.command);
          std::string flag = std::string(key) == "p"       ? "-p"
                             : std::string(key) == "vars"  ? "--vars"
                             : std::string(key) == "ideal" ? "--ideal"
                             : std::string(key) == "emax"  ? "--emax"
                                                           : "--" + std::string(key);
          if (sub->count(flag) > 0) given.insert(key);
        }
        load_job_file(job.file, job, given);
      }
      if (job.p == 0) throw InputError("missing -p");
      if (job.vars.empty()) throw InputError("missing -v/--vars");
      ctx.ring = make_ring(job.p, job.vars, parse_monomial_order(job.monomial_order));
      ctx.ideal = Ideal::parse(ctx.ring, job.gens);
      power_of_p(job.p, job.e);
    }
    ctx.job = job;

    std::string key = canonical_job(ctx);
    std::optional<fs::path> cache_file;
    std::string dir = job.cache_dir;
    if (dir.empty())
      if (const char* env = std::getenv("FPURE_CACHE_DIR")) dir = env;
    if (!dir.empty()) {
      cache_file = fs::path(dir) / (hex64(fnv1a64(key)) + ".json");
      if (auto hit = cache_load(*cache_file, key, err)) {
        out << hit->out;
        err << hit->err;
        return hit->exit;
      }
    }

    std::ostringstream body, diag;
    int code = kExitOk;
    const std::string& c = job.command;
    if (c == "fedder") code = cmd_fedder(ctx, body, diag);
    else if (c == "theta") code = cmd_theta(ctx, body, diag);
    else if (c == "fpt") code = cmd_fpt(ctx, body, diag);
    else if (c == "dfpt-strata") code = cmd_strata(ctx, body, diag);
    else if (c == "diffpow") code = cmd_diffpow(ctx, body, diag);
    else if (c == "check") code = cmd_check(ctx, body, diag);
    else if (c == "signature") code = cmd_signature(ctx, body, diag);
    out << body.str();
    err << diag.str();
    if (cache_file) cache_store(*cache_file, key, {code, body.str(), diag.str()}, err);
    return code;
  } catch (const NotFpureError& e) {
    report_error(job, err, "not_fpure", std::string("NOT_FPURE: ") + e.what(), kExitSentinel);
    return kExitSentinel;
  } catch (const ParseError& e) {
    report_error(job, err, "parse", e.what(), kExitInput);
    return kExitInput;
  } catch (const BudgetExhausted& e) {
    report_error(job, err, "budget", e.what(), kExitBudget);
    return kExitBudget;
  } catch (const InputError& e) {
    report_error(job, err, "input", e.what(), kExitInput);
    return kExitInput;
  } catch (const Error& e) {
    report_error(job, err, "math", e.what(), kExitInput);
    return kExitInput;
  }
}

}  // namespace fpure
