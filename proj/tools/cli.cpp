#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <istream>
#include <ostream>

#include "fpaths/counting.hpp"
#include "fpaths/error.hpp"
#include "fpaths/family.hpp"
#include "fpaths/verify.hpp"

namespace fpaths::cli {

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

std::map<std::string, Family> family_map() {
  std::map<std::string, Family> out;
  for (Family f : kAllFamilies) out.emplace(family_name(f), f);
  return out;
}

std::string triple_text(const StatTriple& t) {
  return std::to_string(t.h) + "," + std::to_string(t.l) + "," + std::to_string(t.a1);
}

bool next_object(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return true;
  }
  return false;
}

int cmd_enumerate(Family f, int n, bool with_stats, std::ostream& out) {
  visit_family(f, [&]<Family F>() {
    using T = FamilyTraits<F>;
    for (const auto& o : T::generate(n)) {
      out << T::render(o);
      if (with_stats) out << '\t' << triple_text(T::stats(o));
      out << '\n';
    }
  });
  return 0;
}

int cmd_map(Family from, Family to, std::istream& in, std::ostream& out) {
  std::string line;
  while (next_object(in, line)) {
    const FPath q = visit_family(from, [&]<Family F>() {
      return FamilyTraits<F>::to_fpath(FamilyTraits<F>::parse(line));
    });
    out << visit_family(to, [&]<Family F>() {
      return FamilyTraits<F>::render(FamilyTraits<F>::from_fpath(q));
    }) << '\n';
  }
  return 0;
}

int cmd_stats(Family f, std::istream& in, std::ostream& out) {
  std::string line;
  while (next_object(in, line)) {
    out << visit_family(f, [&]<Family F>() {
      return triple_text(FamilyTraits<F>::stats(FamilyTraits<F>::parse(line)));
    }) << '\n';
  }
  return 0;
}

int cmd_table(const std::string& which, int max_n, std::ostream& out) {
  for (int n = 0; n <= max_n; ++n) {
    for (int v = 0; v <= n; ++v) {
      MarginalSpec spec;
      (which == "h" ? spec.h : spec.l) = v;
      out << (v ? " " : "") << a_marginal(n, spec);
    }
    out << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Enumerate and transcode the F-path family of combinatorial objects", "fpaths"};
  app.require_subcommand(1);
  const auto families = family_map();
  auto family_option = [&](CLI::App* cmd, const char* name, Family& target, const char* help) {
    cmd->add_option(name, target, help)->required()->transform(CLI::CheckedTransformer(families));
  };

  Family family = Family::FPath;
  Family to = Family::FPath;
  int n = 0;
  bool with_stats = false;

  auto* enumerate = app.add_subcommand("enumerate", "List every object of a family for size n");
  family_option(enumerate, "--family", family, "Object family");
  enumerate->add_option("--n", n, "F-path length (families of size n+1 use n+1)")->required()
      ->check(CLI::Range(0, 10));
  enumerate->add_flag("--stats", with_stats, "Append a tab and the h,l,a1 triple");

  auto* map = app.add_subcommand("map", "Transcode objects read from stdin through the F-path hub");
  family_option(map, "--from", family, "Source family");
  family_option(map, "--to", to, "Target family");

  auto* stats = app.add_subcommand("stats", "Print the h,l,a1 triple of each object on stdin");
  family_option(stats, "--family", family, "Object family");

  std::optional<int> h, l, m;
  std::vector<int> refined;
  auto* count = app.add_subcommand("count", "Closed-form counts of F-paths of length n");
  count->set_help_flag("--help", "Print this help message and exit");
  count->add_option("--n", n, "F-path length")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--h", h, "Fix the aone statistic");
  count->add_option("--l", l, "Fix the north statistic");
  count->add_option("--m", m, "Fix the height");
  count->add_option("--refined", refined, "Step-class counts I,J,K,L,M")->delimiter(',')->expected(5);

  std::string which;
  int table_max = 5;
  auto* table = app.add_subcommand("table", "Marginal distribution by aone (h) or north (l)");
  table->add_option("--which", which, "h or l")->required()->check(CLI::IsMember({"h", "l"}));
  table->add_option("--max-n", table_max, "Last row")->check(CLI::Range(0, 200));

  int max_n = 6;
  bool bfile = false;
  auto* seq = app.add_subcommand("sequence", "Total counts a_0 .. a_max");
  seq->add_option("--max-n", max_n, "Last index")->required()->check(CLI::Range(0, 1000));
  seq->add_flag("--bfile", bfile, "Emit \"n a(n)\" lines");

  int verify_max = kDefaultVerifyMaxN;
  std::string json_path;
  bool quiet = false;
  auto* verify = app.add_subcommand("verify", "Run the exhaustive cross-checks");
  verify->add_option("--max-n", verify_max, "Largest F-path length")->check(CLI::Range(0, 7));
  verify->add_option("--json", json_path, "Also write the report as JSON");
  verify->add_flag("--quiet", quiet, "Print failures and the summary only");

  std::vector<std::string> argv_store{"fpaths"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(family, n, with_stats, out);
    if (*map) return cmd_map(family, to, in, out);
    if (*stats) return cmd_stats(family, in, out);
    if (*count) {
      if (!refined.empty()) {
        out << f_refined(n, refined[0], refined[1], refined[2], refined[3], refined[4]) << '\n';
      } else {
        out << a_marginal(n, {h, l, m}) << '\n';
      }
      return 0;
    }
    if (*table) return cmd_table(which, table_max, out);
    if (*seq) {
      const auto values = sequence(max_n);
      if (bfile) {
        out << render_bfile(values);
      } else {
        for (std::size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << values[i];
        out << '\n';
      }
      return 0;
    }
    if (*verify) {
      const VerifyReport report = run_all(verify_max);
      if (quiet) {
        for (const Check& c : report.checks) {
          if (!c.pass) out << "FAIL " << c.name << " n=" << c.n << "  " << c.detail << '\n';
        }
        out << report.passed() << " passed, " << report.failed() << " failed\n";
      } else {
        out << report.to_text();
      }
      if (!json_path.empty()) {
        std::ofstream file(json_path);
        if (!file) {
          err << "error: cannot write " << json_path << '\n';
          return kUsage;
        }
        file << report.to_json() << '\n';
      }
      return report.ok() ? 0 : kVerifyFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace fpaths::cli
