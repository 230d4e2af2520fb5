// Command-line front end: winners, solve, generate, oracle, decode, batch,
// pad, validate.  Exit codes: 0 = yes/success, 1 = no, 2 = error or budget
// exceeded.

#include <iostream>

#include "CLI11.hpp"
#include "president/io.hpp"
#include "president/reductions.hpp"
#include "president/schulze.hpp"
#include "president/solvers.hpp"

namespace {

bool is_formula_kind(president::ReductionKind kind) {
  return kind != president::ReductionKind::pp_mcc &&
         kind != president::ReductionKind::np_mcc;
}

std::vector<std::string> parse_name_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> names;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string name;
    while (ls >> name) names.push_back(name);
  }
  return names;
}

void emit(const std::string& text, const std::string& out_file) {
  if (out_file.empty())
    std::cout << text;
  else
    president::write_text_file(out_file, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Possible and Necessary President under Schulze voting"};
  app.require_subcommand(1);

  std::uint64_t budget = president::kDefaultNominationBudget;
  unsigned seed = 1;
  int jobs = 1;
  app.add_option("--budget", budget, "work budget for the solvers");
  app.add_option("--seed", seed, "random seed for the generators");
  app.add_option("--jobs", jobs, "worker threads for batch runs");

  auto* winners_cmd =
      app.add_subcommand("winners", "list the Schulze winners of an election");
  std::string winners_file;
  bool winners_strengths = false;
  winners_cmd->add_option("file", winners_file, "election file")->required();
  winners_cmd->add_flag("--strengths", winners_strengths,
                        "also print the beatpath strength matrix (TSV)");

  auto* solve_cmd = app.add_subcommand(
      "solve", "decide Possible or Necessary President for a party election");
  std::string solve_problem;
  std::string solve_algorithm = "auto";
  std::string solve_file;
  std::string solve_witness_out;
  solve_cmd->add_option("--problem", solve_problem, "possible | necessary")
      ->required();
  solve_cmd->add_option("--algorithm", solve_algorithm,
                        "auto | brute | two-voter | fpt3");
  solve_cmd->add_option("--witness-out", solve_witness_out,
                        "write the witness (or first counterexample) nomination");
  solve_cmd->add_option("--budget", budget, "work budget for the solvers");
  solve_cmd->add_option("file", solve_file, "party election file")->required();

  auto* generate_cmd = app.add_subcommand(
      "generate", "build a party election from a CNF formula or colored graph");
  std::string generate_kind;
  std::string generate_in;
  std::string generate_out;
  std::string generate_source_out;
  int random_vars = 0;
  int random_classes = 0;
  int random_class_size = 0;
  int random_edges = 0;
  generate_cmd
      ->add_option("kind", generate_kind,
                   "pp3 | pp4 | np3 | np4 | ppmcc | npmcc")
      ->required();
  generate_cmd->add_option("--in", generate_in,
                           "source instance (DIMACS CNF or colored graph)");
  generate_cmd->add_option("--out", generate_out, "output election file");
  generate_cmd->add_option("--source-out", generate_source_out,
                           "also write the (possibly random) source instance");
  generate_cmd->add_option("--random-vars", random_vars,
                           "random 2-balanced formula with this many variables");
  generate_cmd->add_option("--random-classes", random_classes,
                           "random colored graph: number of color classes");
  generate_cmd->add_option("--random-class-size", random_class_size,
                           "random colored graph: vertices per class");
  generate_cmd->add_option("--random-edges", random_edges,
                           "random colored graph: edges per class pair");
  generate_cmd->add_option("--seed", seed, "random seed for the generators");

  auto* oracle_cmd = app.add_subcommand(
      "oracle", "exhaustively solve a source instance (sat | clique)");
  std::string oracle_mode;
  std::string oracle_in;
  int oracle_limit = -1;
  oracle_cmd->add_option("mode", oracle_mode, "sat | clique")->required();
  oracle_cmd->add_option("--in", oracle_in, "source instance file")->required();
  oracle_cmd->add_option("--limit", oracle_limit,
                         "size cap (variables for sat, transversals for clique)");

  auto* decode_cmd = app.add_subcommand(
      "decode", "map a nomination back to an assignment or clique");
  std::string decode_kind;
  std::string decode_instance;
  std::string decode_nomination;
  decode_cmd
      ->add_option("--kind", decode_kind, "pp3 | pp4 | np3 | np4 | ppmcc | npmcc")
      ->required();
  decode_cmd->add_option("--instance", decode_instance, "source instance file")
      ->required();
  decode_cmd
      ->add_option("--nomination", decode_nomination,
                   "file of nominated candidate names")
      ->required();

  auto* batch_cmd =
      app.add_subcommand("batch", "run a manifest of solve jobs, report TSV");
  std::string batch_manifest;
  std::string batch_out;
  batch_cmd->add_option("manifest", batch_manifest,
                        "file of '<instance> <problem> <algorithm>' rows")
      ->required();
  batch_cmd->add_option("--out", batch_out, "output TSV file");
  batch_cmd->add_option("--jobs", jobs, "worker threads for batch runs");
  batch_cmd->add_option("--budget", budget, "work budget for the solvers");

  auto* pad_cmd = app.add_subcommand(
      "pad", "append reversed ballot pairs to an election");
  std::string pad_file;
  std::string pad_out;
  int pad_pairs = 0;
  pad_cmd->add_option("--pairs", pad_pairs, "number of reversed pairs")
      ->required();
  pad_cmd->add_option("--out", pad_out, "output file");
  pad_cmd->add_option("file", pad_file, "election file")->required();

  auto* validate_cmd =
      app.add_subcommand("validate", "check a file and print a summary");
  std::string validate_file;
  validate_cmd->add_option("file", validate_file, "election file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*winners_cmd) {
      const auto parsed =
          president::parse_election_file(president::read_text_file(winners_file));
      const auto& e = parsed.election;
      for (const auto& name : president::schulze_winners(e))
        std::cout << name << '\n';
      if (winners_strengths) {
        const auto strengths =
            president::beatpath_strengths(president::weighted_majority_graph(e));
        std::cout << "candidate";
        for (const auto& name : e.candidates) std::cout << '\t' << name;
        std::cout << '\n';
        for (int a = 0; a < e.candidate_count(); ++a) {
          std::cout << e.candidates[static_cast<std::size_t>(a)];
          for (int b = 0; b < e.candidate_count(); ++b)
            if (a == b)
              std::cout << "\t-";
            else
              std::cout << '\t' << strengths.str(a, b);
          std::cout << '\n';
        }
      }
      return 0;
    }

    if (*solve_cmd) {
      const auto pe = president::parse_party_election(
          president::read_text_file(solve_file));
      const auto verdict =
          president::solve(pe, president::parse_problem(solve_problem),
                           president::parse_algorithm(solve_algorithm), budget);
      std::cout << president::format_verdict(pe, verdict);
      if (!solve_witness_out.empty()) {
        const president::Nomination* nomination = nullptr;
        if (verdict.witness)
          nomination = &*verdict.witness;
        else if (!verdict.counterexamples.empty())
          nomination = &verdict.counterexamples.front().second;
        if (nomination)
          president::write_text_file(
              solve_witness_out, president::serialize_nomination(pe, *nomination));
      }
      return verdict.answer ? 0 : 1;
    }

    if (*generate_cmd) {
      const auto kind = president::parse_reduction_kind(generate_kind);
      std::mt19937 rng(seed);
      president::PartyElection pe;
      if (is_formula_kind(kind)) {
        president::BalancedCnf f;
        if (!generate_in.empty() && random_vars == 0)
          f = president::parse_dimacs(president::read_text_file(generate_in));
        else if (generate_in.empty() && random_vars > 0)
          f = president::random_balanced_cnf(rng, random_vars);
        else
          throw std::invalid_argument(
              "need exactly one of --in and --random-vars");
        f.validate();
        pe = president::build_reduction(kind, f);
        if (!generate_source_out.empty())
          president::write_text_file(generate_source_out,
                                     president::serialize_dimacs(f));
      } else {
        president::ColoredGraph h;
        const bool random_graph =
            random_classes > 0 || random_class_size > 0 || random_edges > 0;
        if (!generate_in.empty() && !random_graph)
          h = president::parse_colored_graph(
              president::read_text_file(generate_in));
        else if (generate_in.empty() && random_graph)
          h = president::random_colored_graph(rng, random_classes,
                                              random_class_size, random_edges);
        else
          throw std::invalid_argument(
              "need exactly one of --in and --random-classes/size/edges");
        pe = president::build_reduction(kind, h);
        if (!generate_source_out.empty())
          president::write_text_file(generate_source_out,
                                     president::serialize_colored_graph(h));
      }
      emit(president::serialize_party_election(pe), generate_out);
      return 0;
    }

    if (*oracle_cmd) {
      if (oracle_mode == "sat") {
        const auto f =
            president::parse_dimacs(president::read_text_file(oracle_in));
        const auto result =
            president::oracle_sat(f, oracle_limit > 0 ? oracle_limit : 24);
        std::cout << "satisfiable: " << (result.satisfiable ? "yes" : "no")
                  << '\n';
        if (result.satisfiable) {
          std::cout << "assignment:";
          for (int i = 0; i < f.n; ++i)
            std::cout << " x" << i + 1 << '='
                      << (result.assignment[static_cast<std::size_t>(i)] ? 1 : 0);
          std::cout << '\n';
        }
        return result.satisfiable ? 0 : 1;
      }
      if (oracle_mode == "clique") {
        const auto h = president::parse_colored_graph(
            president::read_text_file(oracle_in));
        const auto result = president::oracle_multicolored_clique(
            h, oracle_limit > 0 ? static_cast<std::uint64_t>(oracle_limit)
                                : std::uint64_t{1} << 24);
        std::cout << "clique: " << (result.found ? "yes" : "no") << '\n';
        if (result.found) {
          std::cout << "vertices:";
          for (const auto& v : result.vertices) std::cout << ' ' << v;
          std::cout << '\n';
        }
        return result.found ? 0 : 1;
      }
      throw std::invalid_argument("oracle mode must be 'sat' or 'clique'");
    }

    if (*decode_cmd) {
      const auto kind = president::parse_reduction_kind(decode_kind);
      const auto nominated = parse_name_list(
          president::read_text_file(decode_nomination));
      bool verified = false;
      if (is_formula_kind(kind)) {
        const auto f =
            president::parse_dimacs(president::read_text_file(decode_instance));
        const auto cert = president::decode_certificate(kind, f, nominated);
        std::cout << "assignment:";
        for (int i = 0; i < f.n; ++i)
          std::cout << " x" << i + 1 << '='
                    << ((*cert.assignment)[static_cast<std::size_t>(i)] ? 1 : 0);
        std::cout << '\n';
        verified = president::evaluate(f, *cert.assignment);
        std::cout << "satisfies: " << (verified ? "yes" : "no") << '\n';
      } else {
        const auto h = president::parse_colored_graph(
            president::read_text_file(decode_instance));
        const auto cert = president::decode_certificate(kind, h, nominated);
        std::cout << "clique:";
        for (const auto& v : *cert.clique) std::cout << ' ' << v;
        std::cout << '\n';
        verified = president::is_multicolored_clique(h, *cert.clique);
        std::cout << "complete: " << (verified ? "yes" : "no") << '\n';
      }
      return verified ? 0 : 1;
    }

    if (*batch_cmd) {
      const auto manifest_path = std::filesystem::path(batch_manifest);
      const auto reports = president::run_batch(
          president::read_text_file(manifest_path),
          manifest_path.has_parent_path() ? manifest_path.parent_path()
                                          : std::filesystem::path("."),
          jobs, budget);
      emit(president::format_reports_tsv(reports), batch_out);
      for (const auto& report : reports)
        if (report.answer == "error") return 2;
      return 0;
    }

    if (*pad_cmd) {
      auto parsed =
          president::parse_election_file(president::read_text_file(pad_file));
      if (parsed.party_election) {
        parsed.party_election->election = president::pad_reversed_pairs(
            parsed.party_election->election, pad_pairs);
        emit(president::serialize_party_election(*parsed.party_election),
             pad_out);
      } else {
        emit(president::serialize_election(
                 president::pad_reversed_pairs(parsed.election, pad_pairs)),
             pad_out);
      }
      return 0;
    }

    if (*validate_cmd) {
      const auto parsed = president::parse_election_file(
          president::read_text_file(validate_file));
      std::cout << "candidates: " << parsed.election.candidate_count() << '\n';
      std::cout << "votes: " << parsed.election.voter_count() << '\n';
      if (parsed.party_election) {
        const auto& pe = *parsed.party_election;
        std::cout << "parties: " << pe.party_count() << '\n';
        std::cout << "distinguished:";
        for (int c : pe.parties[static_cast<std::size_t>(pe.distinguished)])
          std::cout << ' '
                    << pe.election.candidates[static_cast<std::size_t>(c)];
        std::cout << '\n';
        std::cout << "nominations: " << president::nomination_count(pe) << '\n';
      } else {
        std::cout << "parties: none\n";
      }
      return 0;
    }
  } catch (const president::budget_exceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
