// hecke: command-line front end for the combinatorics library.
//
// Exit codes: 0 success, 1 internal error, 2 usage error, 3 verification mismatch.

#include <cstdlib>
#include <filesystem>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "format.hpp"
#include "hecke/abacus.hpp"
#include "hecke/branching.hpp"
#include "hecke/error.hpp"
#include "hecke/fixtures.hpp"
#include "hecke/jantzen.hpp"
#include "hecke/llt.hpp"
#include "hecke/mullineux.hpp"
#include "hecke/notation.hpp"
#include "hecke/verifier.hpp"

namespace fs = std::filesystem;
using namespace hecke;
using hecke::cli::Format;

namespace {

constexpr int kUsage = 2;
constexpr int kMismatch = 3;

// Block context shared by commands that accept bracket labels.
struct BlockArgs {
  bool principal_5e = false;
  std::string beads;
  std::string core;
  int weight = -1;

  void add(CLI::App* cmd) {
    cmd->add_flag("--principal-5e", principal_5e, "principal block of H_{5e}, five beads per runner");
    cmd->add_option("--block", beads, "core bead counts b0,...,b_{e-1}");
    cmd->add_option("--core", core, "e-core partition ('-' for empty)");
    cmd->add_option("--weight", weight, "block weight");
  }

  bool given() const { return principal_5e || !beads.empty() || !core.empty(); }

  // With --block and no --weight the weight is read off `probe`, the first
  // bracket label on the command line.
  std::optional<BlockId> resolve(int e, const std::string& probe = {}) const {
    if (principal_5e) return principal_block(e, 5);
    if (!core.empty()) {
      if (weight < 0) throw Error(ErrorCode::InvalidArgument, "--core needs --weight");
      return make_block(parse_partition(core), e, weight);
    }
    if (beads.empty()) return std::nullopt;
    BlockId block{e, {}, std::max(weight, 0)};
    std::stringstream in(beads);
    for (std::string item; std::getline(in, item, ',');) block.core_beads.push_back(std::stoi(item));
    if (static_cast<int>(block.core_beads.size()) != e) {
      throw Error(ErrorCode::InvalidArgument, "--block needs " + std::to_string(e) + " bead counts");
    }
    if (weight < 0 && !probe.empty() && probe.front() == '<') {
      const auto expr = parse_bracket(probe);
      std::vector<Partition> parts(static_cast<std::size_t>(e));
      for (const auto& [runner, part] : expr.entries) {
        if (runner < 0 || runner >= e) throw Error(ErrorCode::RunnerOutOfRange, probe);
        parts[static_cast<std::size_t>(runner)] = part;
      }
      block.weight = e_core_and_weight(from_runner_partitions(block, parts), e).second;
    }
    return block;
  }
};

// Cache file: --cache wins, then $HECKE_CACHE_DIR/llt.cache.
struct CacheArgs {
  std::string path;
  bool disabled = false;

  void add(CLI::App* cmd) {
    cmd->add_option("--cache", path, "LLT cache file (default $HECKE_CACHE_DIR/llt.cache)");
    cmd->add_flag("--no-cache", disabled, "do not read or write a cache file");
  }

  std::optional<fs::path> file() const {
    if (disabled) return std::nullopt;
    if (!path.empty()) return fs::path(path);
    if (const char* dir = std::getenv("HECKE_CACHE_DIR"); dir && *dir) return fs::path(dir) / "llt.cache";
    return std::nullopt;
  }
};

class CacheSession {
 public:
  explicit CacheSession(std::optional<fs::path> file) : file_(std::move(file)) {
    if (file_ && fs::exists(*file_)) cache_.load(*file_);
  }
  ~CacheSession() {
    try {
      if (file_ && cache_.computed_count() > 0) {
        if (file_->has_parent_path()) fs::create_directories(file_->parent_path());
        cache_.save(*file_);
      }
    } catch (const std::exception& err) {
      std::cerr << "warning: cache not saved: " << err.what() << '\n';
    }
  }
  CanonicalCache& get() { return cache_; }

 private:
  std::optional<fs::path> file_;
  CanonicalCache cache_;
};

int usage_or_internal(const Error& err) {
  switch (err.code()) {
    case ErrorCode::NonExactDivision:
    case ErrorCode::CorrectionDiverged:
    case ErrorCode::HypothesisUnmet:
    case ErrorCode::ExpansionResidue:
    case ErrorCode::PositivityViolation:
    case ErrorCode::SymbolMismatch:
      return 1;
    default:
      return kUsage;
  }
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out;
}

// Runs f on every item with at most `jobs` in flight; results keep item order.
template <typename T, typename F>
auto bounded_map(const std::vector<T>& items, int jobs, F f) {
  using R = decltype(f(items.front()));
  std::vector<R> results;
  results.reserve(items.size());
  const std::size_t width = static_cast<std::size_t>(std::max(jobs, 1));
  for (std::size_t start = 0; start < items.size(); start += width) {
    std::vector<std::future<R>> batch;
    for (std::size_t k = start; k < std::min(items.size(), start + width); ++k) {
      batch.push_back(std::async(std::launch::async, f, items[k]));
    }
    for (auto& fut : batch) results.push_back(fut.get());
  }
  return results;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Abacus combinatorics, canonical bases and adjustment-matrix verification"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expand help for every subcommand");

  int e = 2;
  std::string partition_text;
  std::string format_name = "md";
  int jobs = 1;
  BlockArgs block_args;
  CacheArgs cache_args;
  std::function<int()> action;

  // core
  auto* core_cmd = app.add_subcommand("core", "e-core and e-weight of a partition");
  core_cmd->add_option("--e", e, "runner count")->required()->check(CLI::Range(2, 1000));
  core_cmd->add_option("--partition", partition_text, "part list or bracket label")->required();
  block_args.add(core_cmd);
  core_cmd->callback([&] {
    action = [&] {
      const Partition lambda = parse_partition_arg(partition_text, block_args.resolve(e, partition_text));
      const auto [core, weight] = e_core_and_weight(lambda, e);
      std::cout << "core: " << to_compact_string(core) << "  weight: " << weight << '\n';
      return 0;
    };
  });

  // block
  int bead_count = -1;
  auto* block_cmd = app.add_subcommand("block", "Nakayama block label of a partition");
  block_cmd->add_option("--e", e, "runner count")->required()->check(CLI::Range(2, 1000));
  block_cmd->add_option("--partition", partition_text, "part list or bracket label")->required();
  block_cmd->add_option("--r", bead_count, "bead count (default: least multiple of e >= n)");
  block_args.add(block_cmd);
  block_cmd->callback([&] {
    action = [&] {
      const auto context = block_args.resolve(e, partition_text);
      const Partition lambda = parse_partition_arg(partition_text, context);
      const BlockId block = context ? *context
                                    : (bead_count >= 0 ? block_of(lambda, e, bead_count) : block_of(lambda, e));
      std::cout << "block: " << to_string(block) << '\n';
      std::cout << "label: " << encode_string(lambda, block) << '\n';
      std::cout << "e-regular: " << (is_e_regular(lambda, e) ? "yes" : "no") << '\n';
      return 0;
    };
  });

  // regular
  bool list_all = false;
  auto* regular_cmd = app.add_subcommand("regular", "list the members of a block");
  regular_cmd->add_option("--e", e, "runner count")->required()->check(CLI::Range(2, 1000));
  regular_cmd->add_flag("--all", list_all, "include e-singular partitions (marked *)");
  block_args.add(regular_cmd);
  regular_cmd->callback([&] {
    action = [&] {
      const auto block = block_args.resolve(e);
      if (!block) throw Error(ErrorCode::InvalidArgument, "regular needs --principal-5e, --block or --core");
      std::size_t count = 0;
      for (const auto& entry : enumerate_block(*block)) {
        if (!entry.e_regular && !list_all) continue;
        ++count;
        std::cout << encode_string(entry.partition, *block) << '\t' << to_compact_string(entry.partition)
                  << (entry.e_regular ? "" : "\t*") << '\n';
      }
      std::cerr << count << " partitions\n";
      return 0;
    };
  });

  // mullineux
  std::string table_path;
  bool check = false;
  bool show_symbol = false;
  std::string algorithm = "symbol";
  int e_max = 8;
  auto* mull_cmd = app.add_subcommand("mullineux", "Mullineux map, or check a table of images");
  mull_cmd->add_option("--e", e, "runner count")->check(CLI::Range(2, 1000));
  mull_cmd->add_option("--partition", partition_text, "part list or bracket label");
  mull_cmd->add_option("--algorithm", algorithm, "symbol or kleshchev")
      ->check(CLI::IsMember({"symbol", "kleshchev"}));
  mull_cmd->add_flag("--symbol", show_symbol, "also print the Mullineux symbols");
  mull_cmd->add_option("--table", table_path, "CSV table of images (family,condition,mu,mu_dual,note)");
  mull_cmd->add_flag("--check", check, "compare every table instance, exit 3 on mismatch");
  mull_cmd->add_option("--e-max", e_max, "largest e instantiated from the table")->check(CLI::Range(2, 20));
  block_args.add(mull_cmd);
  mull_cmd->callback([&] {
    action = [&]() -> int {
      if (!table_path.empty()) {
        const auto checks = check_mullineux_table(expand_mullineux_table(read_csv(table_path), 2, e_max));
        std::size_t bad = 0;
        for (const auto& c : checks) {
          if (c.ok && check) continue;
          if (!c.ok) ++bad;
          std::cout << (c.ok ? "ok  " : "BAD ") << "line " << c.row.line << "  e=" << c.row.vars.at('e');
          for (const auto& [name, value] : c.row.vars) {
            if (name != 'e') std::cout << ' ' << name << '=' << value;
          }
          std::cout << "  " << c.row.mu << " -> printed " << c.row.mu_dual << ", computed "
                    << (c.computed_text.empty() ? "?" : c.computed_text);
          if (!c.error.empty()) std::cout << "  (" << c.error << ')';
          std::cout << '\n';
        }
        std::cout << "instances: " << checks.size() << "  mismatches: " << bad << '\n';
        return check && bad ? kMismatch : 0;
      }
      if (partition_text.empty()) throw Error(ErrorCode::InvalidArgument, "need --partition or --table");
      const auto block = block_args.resolve(e, partition_text);
      const Partition lambda = parse_partition_arg(partition_text, block);
      const Partition image = algorithm == "kleshchev" ? mullineux_kleshchev(lambda, e) : mullineux(lambda, e);
      std::cout << cli::label(image, block) << '\n';
      if (show_symbol) {
        std::cout << "symbol: " << to_string(mullineux_symbol(lambda, e)) << '\n';
        std::cout << "image symbol: " << to_string(mullineux_symbol(image, e)) << '\n';
      }
      return 0;
    };
  });

  // branch
  int runner = 0;
  int kappa = 1;
  std::string chain;
  auto* branch_cmd = app.add_subcommand("branch", "signatures, normal beads and branching labels");
  branch_cmd->add_option("--e", e, "runner count")->required()->check(CLI::Range(2, 1000));
  branch_cmd->add_option("--partition", partition_text, "part list or bracket label")->required();
  branch_cmd->add_option("--r", bead_count, "bead count (default: the block's reference count)");
  branch_cmd->add_option("--pair", runner, "runner i of the pair (i-1, i)");
  branch_cmd->add_option("--kappa", kappa, "beads moved")->check(CLI::Range(1, 100));
  branch_cmd->add_option("--chain", chain, "restriction chain: runners, optionally i:kappa, comma separated");
  block_args.add(branch_cmd);
  branch_cmd->callback([&] {
    action = [&]() -> int {
      const auto context = block_args.resolve(e, partition_text);
      Partition lambda = parse_partition_arg(partition_text, context);
      const int r = bead_count >= 0 ? bead_count
                                    : (context ? context->bead_count() : default_bead_count(lambda.size(), e));
      BlockId block = block_of(lambda, e, r);
      if (chain.empty()) {
        const Signature sig = signature(lambda, e, r, (runner % e + e) % e);
        std::cout << "partition: " << to_compact_string(lambda) << "  block: " << to_string(block) << '\n';
        std::cout << "signature: " << to_string(sig) << "\nreduced: " << to_string(sig, true) << '\n';
        std::cout << "normal rows: " << join(sig.normal_rows) << "\nconormal rows: " << join(sig.conormal_rows)
                  << '\n';
        for (const Direction dir : {Direction::Restrict, Direction::Induce}) {
          const char* name = dir == Direction::Restrict ? "restrict" : "induce";
          const auto move = make_move(block, (runner % e + e) % e, kappa, dir);
          if (!move) {
            std::cout << name << ": no target block\n";
            continue;
          }
          const auto simple = dir == Direction::Restrict ? simple_restrict(lambda, *move)
                                                         : simple_induce(lambda, *move);
          const auto specht = dir == Direction::Restrict ? specht_restrict_list(lambda, *move)
                                                         : specht_induce_list(lambda, *move);
          static const char* outcomes[] = {"zero", "simple", "reducible"};
          std::cout << name << ": " << outcomes[static_cast<int>(simple.outcome)];
          if (simple.label) std::cout << " -> " << encode_string(*simple.label, move->target_block);
          std::cout << "  target " << to_string(move->target_block) << "\n  specht factors:";
          for (const auto& f : specht.factors) std::cout << ' ' << encode_string(f, move->target_block);
          std::cout << "  (each x" << specht.multiplicity << ")\n";
        }
        return 0;
      }
      std::stringstream in(chain);
      std::cout << "start " << encode_string(lambda, block) << "  " << to_string(block) << '\n';
      for (std::string step; std::getline(in, step, ',');) {
        const auto colon = step.find(':');
        const int i = std::stoi(step.substr(0, colon));
        const int k = colon == std::string::npos ? 1 : std::stoi(step.substr(colon + 1));
        const auto move = make_move(block, (i % e + e) % e, k, Direction::Restrict);
        if (!move) throw Error(ErrorCode::InvalidArgument, "runner " + step + " has no restriction target");
        const auto simple = simple_restrict(lambda, *move);
        std::cout << "runner " << i << " kappa " << k << ": ";
        if (!simple.label) {
          std::cout << "zero\n";
          return 0;
        }
        lambda = *simple.label;
        block = move->target_block;
        std::cout << (simple.outcome == BranchOutcome::Reducible ? "reducible, socle " : "simple ")
                  << encode_string(lambda, block) << "  " << to_string(block) << '\n';
      }
      return 0;
    };
  });

  // llt
  std::string mu_text;
  auto* llt_cmd = app.add_subcommand("llt", "canonical basis vector G(mu)");
  llt_cmd->add_option("--e", e, "runner count")->required()->check(CLI::Range(2, 1000));
  llt_cmd->add_option("--mu", mu_text, "e-regular partition")->required();
  llt_cmd->add_option("--format", format_name, "md, csv or json");
  block_args.add(llt_cmd);
  cache_args.add(llt_cmd);
  llt_cmd->callback([&] {
    action = [&] {
      const auto block = block_args.resolve(e, mu_text);
      const Partition mu = parse_partition_arg(mu_text, block);
      const Format format = cli::parse_format(format_name);
      CacheSession session(cache_args.file());
      cli::write_canonical(std::cout, mu, canonical_basis(mu, e, session.get()), block, format);
      return 0;
    };
  });

  // dmatrix
  bool at_v1 = false;
  auto* dm_cmd = app.add_subcommand("dmatrix", "v-decomposition matrix of a block");
  dm_cmd->add_option("--e", e, "runner count")->required()->check(CLI::Range(2, 1000));
  dm_cmd->add_flag("--at-v1", at_v1, "specialize at v = 1");
  dm_cmd->add_option("--format", format_name, "md, csv or json");
  dm_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  block_args.add(dm_cmd);
  cache_args.add(dm_cmd);
  dm_cmd->callback([&] {
    action = [&] {
      const auto block = block_args.resolve(e);
      if (!block) throw Error(ErrorCode::InvalidArgument, "dmatrix needs --core and --weight (or --principal-5e)");
      const Format format = cli::parse_format(format_name);
      CacheSession session(cache_args.file());
      cli::write_dmatrix(std::cout, decomposition_matrix(*block, session.get(), jobs), at_v1, format);
      return 0;
    };
  });

  // js
  int p = 0;
  std::string lambda_text;
  bool check_rh = false;
  int max_n = 10;
  std::vector<int> e_values{2, 3, 4};
  auto* js_cmd = app.add_subcommand("js", "Jantzen-Schaper bound and the Ryom-Hansen comparison");
  js_cmd->add_option("--e", e, "runner count")->check(CLI::Range(2, 1000));
  js_cmd->add_option("--p", p, "characteristic (0 or prime)");
  js_cmd->add_option("--lambda", lambda_text, "partition");
  js_cmd->add_option("--mu", mu_text, "e-regular partition");
  js_cmd->add_flag("--check-ryom-hansen", check_rh, "compare J_F(p=0) with d'(1) exhaustively");
  js_cmd->add_option("--max-n", max_n, "largest n for the sweep")->check(CLI::Range(0, 14));
  js_cmd->add_option("--e-values", e_values, "runner counts for the sweep")->delimiter(',');
  block_args.add(js_cmd);
  cache_args.add(js_cmd);
  js_cmd->callback([&] {
    action = [&]() -> int {
      CacheSession session(cache_args.file());
      if (check_rh) {
        const auto summary = ryom_hansen_sweep(max_n, e_values, session.get());
        for (const auto& m : summary.mismatches) {
          std::cout << "mismatch e=" << m.e << " lambda=" << to_compact_string(m.lambda)
                    << " mu=" << to_compact_string(m.mu) << " J_F=" << m.js << " J_C=" << m.jc << '\n';
        }
        std::cout << "pairs: " << summary.pairs << "  mismatches: " << summary.mismatches.size()
                  << "  zero-pattern mismatches: " << summary.zero_mismatches << '\n';
        return summary.mismatches.empty() && summary.zero_mismatches == 0 ? 0 : kMismatch;
      }
      if (lambda_text.empty() || mu_text.empty()) throw Error(ErrorCode::InvalidArgument, "need --lambda and --mu");
      const auto block = block_args.resolve(e, lambda_text);
      const Partition lambda = parse_partition_arg(lambda_text, block);
      const Partition mu = parse_partition_arg(mu_text, block);
      const FockVector g = canonical_basis(mu, e, session.get());
      const auto oracle = [&g](const Partition& tau) { return g.coefficient(tau).eval_at_one(); };
      std::cout << "J_F: " << js_bound(lambda, mu, e, p, oracle) << "  (p=" << p << ", char-0 oracle)\n";
      std::cout << "J_C: " << g.coefficient(lambda).derivative_at_one() << "\n";
      std::cout << "d: " << to_string(g.coefficient(lambda)) << '\n';
      return 0;
    };
  });

  // verify
  std::vector<int> verify_es;
  bool all_entries = false;
  bool no_prop33 = false;
  auto* verify_cmd = app.add_subcommand("verify", "adjustment-matrix verification for the principal block of H_{5e}");
  verify_cmd->add_option("--e", verify_es, "runner count (repeatable)")->required()->check(CLI::Range(2, 12));
  verify_cmd->add_option("--format", format_name, "md, csv or json");
  verify_cmd->add_flag("--all", all_entries, "list every off-diagonal entry");
  verify_cmd->add_flag("--no-prop33", no_prop33, "skip the Fock-space argument for the e>=4 family");
  verify_cmd->add_option("--jobs", jobs, "reports computed in parallel")->check(CLI::Range(1, 256));
  cache_args.add(verify_cmd);
  verify_cmd->callback([&] {
    action = [&] {
      const Format format = cli::parse_format(format_name);
      CacheSession session(cache_args.file());
      VerifyOptions options;
      options.run_prop33 = !no_prop33;
      const auto reports =
          bounded_map(verify_es, jobs, [&](int ev) { return report(ev, session.get(), options); });
      bool all_match = true;
      for (const auto& rep : reports) {
        cli::write_report(std::cout, rep, format, all_entries);
        all_match = all_match && rep.matches_expectation();
      }
      return all_match ? 0 : kMismatch;
    };
  });

  // cache
  std::string cache_action = "info";
  auto* cache_cmd = app.add_subcommand("cache", "inspect, warm or clear the LLT cache file");
  cache_cmd->add_option("action", cache_action, "info, warm or clear")->check(CLI::IsMember({"info", "warm", "clear"}));
  cache_cmd->add_option("--e", verify_es, "runner counts to warm (principal block of H_{5e})");
  cache_cmd->add_option("--jobs", jobs, "parallel reports while warming")->check(CLI::Range(1, 256));
  cache_args.add(cache_cmd);
  cache_cmd->callback([&] {
    action = [&]() -> int {
      const auto file = cache_args.file();
      if (!file) throw Error(ErrorCode::InvalidArgument, "no cache file: pass --cache or set HECKE_CACHE_DIR");
      if (cache_action == "clear") {
        std::cout << (fs::remove(*file) ? "removed " : "absent ") << file->string() << '\n';
        return 0;
      }
      std::size_t records = 0;
      {
        CacheSession session(file);
        if (cache_action == "warm") {
          bounded_map(verify_es, jobs, [&](int ev) { return report(ev, session.get()).e; });
        }
        records = session.get().size();
      }
      std::cout << "path: " << file->string() << "  records: " << records << '\n';
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kUsage;
  }
  try {
    return action ? action() : kUsage;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return usage_or_internal(err);
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: bad number: " << err.what() << '\n';
    return kUsage;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << '\n';
    return 1;
  }
}
