#pragma once

// Text formats and batch execution: election and party-election files,
// nomination files, verdict reports, and a manifest-driven batch runner.

#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "president/core.hpp"
#include "president/solvers.hpp"

namespace president {

// ---------------------------------------------------------------------------
// Election files.
//
//   # comment
//   candidates: a b c d
//   party*: a
//   party: b c
//   party: d
//   vote: a c b d
//   vote: d b c a
//
// The candidates line comes first; party lines are optional as a group (a
// plain election has none) but when present exactly one must be starred as
// distinguished and they must partition the roster.  Ballots rank every
// candidate.
// ---------------------------------------------------------------------------

struct ParsedElectionFile {
  Election election;
  std::optional<PartyElection> party_election;  // set iff party lines present
};

namespace detail {

[[noreturn]] inline void parse_fail(int line_no, const std::string& message) {
  throw std::invalid_argument("line " + std::to_string(line_no) + ": " + message);
}

}  // namespace detail

inline ParsedElectionFile parse_election_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool roster_seen = false;
  Election election;
  std::vector<std::vector<int>> parties;
  std::optional<int> distinguished;
  std::unordered_map<std::string, int> index;
  std::vector<int> party_of;

  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    std::vector<std::string> tokens;
    std::string token;
    while (ls >> token) tokens.push_back(token);

    if (head == "candidates:") {
      if (roster_seen) detail::parse_fail(line_no, "duplicate candidates line");
      if (tokens.empty()) detail::parse_fail(line_no, "empty candidate list");
      for (const auto& name : tokens) {
        if (!index.emplace(name, static_cast<int>(election.candidates.size())).second)
          detail::parse_fail(line_no, "duplicate candidate: " + name);
        election.candidates.push_back(name);
      }
      party_of.assign(election.candidates.size(), -1);
      roster_seen = true;
      continue;
    }
    if (!roster_seen)
      detail::parse_fail(line_no, "expected candidates line before '" + head + "'");

    if (head == "party:" || head == "party*:") {
      if (tokens.empty()) detail::parse_fail(line_no, "empty party");
      std::vector<int> members;
      for (const auto& name : tokens) {
        const auto it = index.find(name);
        if (it == index.end())
          detail::parse_fail(line_no, "unknown candidate: " + name);
        if (party_of[static_cast<std::size_t>(it->second)] >= 0)
          detail::parse_fail(line_no,
                             "candidate in more than one party: " + name);
        party_of[static_cast<std::size_t>(it->second)] =
            static_cast<int>(parties.size());
        members.push_back(it->second);
      }
      std::sort(members.begin(), members.end());
      if (head == "party*:") {
        if (distinguished)
          detail::parse_fail(line_no, "more than one distinguished party");
        distinguished = static_cast<int>(parties.size());
      }
      parties.push_back(std::move(members));
    } else if (head == "vote:") {
      if (tokens.size() != election.candidates.size())
        detail::parse_fail(line_no, "ballot ranks " + std::to_string(tokens.size()) +
                                        " of " +
                                        std::to_string(election.candidates.size()) +
                                        " candidates");
      std::vector<int> ballot;
      std::vector<char> seen(election.candidates.size(), 0);
      for (const auto& name : tokens) {
        const auto it = index.find(name);
        if (it == index.end())
          detail::parse_fail(line_no, "unknown candidate: " + name);
        if (seen[static_cast<std::size_t>(it->second)])
          detail::parse_fail(line_no, "candidate ranked twice: " + name);
        seen[static_cast<std::size_t>(it->second)] = 1;
        ballot.push_back(it->second);
      }
      election.votes.push_back(std::move(ballot));
    } else {
      detail::parse_fail(line_no, "unknown directive '" + head + "'");
    }
  }
  if (!roster_seen) throw std::invalid_argument("missing candidates line");

  ParsedElectionFile parsed;
  parsed.election = std::move(election);
  if (!parties.empty()) {
    if (!distinguished)
      throw std::invalid_argument("party lines present but none is distinguished (party*:)");
    for (std::size_t c = 0; c < party_of.size(); ++c)
      if (party_of[c] < 0)
        throw std::invalid_argument("candidate belongs to no party: " +
                                    parsed.election.candidates[c]);
    PartyElection pe;
    pe.election = parsed.election;
    pe.parties = std::move(parties);
    pe.distinguished = *distinguished;
    pe.validate();
    parsed.party_election = std::move(pe);
  }
  return parsed;
}

inline Election parse_election(const std::string& text) {
  return parse_election_file(text).election;
}

inline PartyElection parse_party_election(const std::string& text) {
  auto parsed = parse_election_file(text);
  if (!parsed.party_election)
    throw std::invalid_argument("file has no party lines");
  return std::move(*parsed.party_election);
}

inline std::string serialize_election(const Election& e) {
  std::ostringstream out;
  out << "candidates:";
  for (const auto& name : e.candidates) out << ' ' << name;
  out << '\n';
  for (const auto& vote : e.votes) {
    out << "vote:";
    for (int c : vote) out << ' ' << e.candidates[static_cast<std::size_t>(c)];
    out << '\n';
  }
  return out.str();
}

inline std::string serialize_party_election(const PartyElection& pe) {
  std::ostringstream out;
  out << "candidates:";
  for (const auto& name : pe.election.candidates) out << ' ' << name;
  out << '\n';
  for (std::size_t i = 0; i < pe.parties.size(); ++i) {
    out << (static_cast<int>(i) == pe.distinguished ? "party*:" : "party:");
    for (int c : pe.parties[i])
      out << ' ' << pe.election.candidates[static_cast<std::size_t>(c)];
    out << '\n';
  }
  for (const auto& vote : pe.election.votes) {
    out << "vote:";
    for (int c : vote)
      out << ' ' << pe.election.candidates[static_cast<std::size_t>(c)];
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Nomination files: whitespace-separated candidate names, '#' comments.
// Names may appear in any order; they must pick exactly one candidate per
// party.
// ---------------------------------------------------------------------------

inline Nomination parse_nomination(const std::string& text,
                                   const PartyElection& pe) {
  std::istringstream in(text);
  std::string line;
  Nomination nom;
  nom.by_party.assign(pe.parties.size(), -1);
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string name;
    while (ls >> name) {
      const int c = pe.election.require_candidate(name);
      const int party = pe.party_of(c);
      if (nom.by_party[static_cast<std::size_t>(party)] >= 0)
        throw std::invalid_argument("two nominees from one party: " + name);
      nom.by_party[static_cast<std::size_t>(party)] = c;
    }
  }
  for (std::size_t i = 0; i < nom.by_party.size(); ++i)
    if (nom.by_party[i] < 0)
      throw std::invalid_argument(
          "no nominee for party " + std::to_string(i + 1) + " (" +
          pe.election.candidates[static_cast<std::size_t>(pe.parties[i][0])] +
          "...)");
  return nom;
}

inline std::string serialize_nomination(const PartyElection& pe,
                                        const Nomination& nom) {
  std::ostringstream out;
  for (int c : nom.by_party)
    out << pe.election.candidates[static_cast<std::size_t>(c)] << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Verdict reports.
// ---------------------------------------------------------------------------

inline std::string format_verdict(const PartyElection& pe, const Verdict& v) {
  std::ostringstream out;
  const auto name = [&](int c) {
    return pe.election.candidates[static_cast<std::size_t>(c)];
  };
  out << "answer: " << (v.answer ? "yes" : "no") << '\n';
  out << "algorithm: " << v.algorithm << '\n';
  if (v.witness) {
    out << "witness:";
    for (int c : v.witness->by_party) out << ' ' << name(c);
    out << '\n';
  }
  if (v.necessary_candidate) out << "president: " << name(*v.necessary_candidate) << '\n';
  for (const auto& [candidate, nomination] : v.counterexamples) {
    out << "counterexample " << name(candidate) << ':';
    for (int c : nomination.by_party) out << ' ' << name(c);
    out << '\n';
  }
  out << "nominations-examined: " << v.stats.nominations_examined << '\n';
  out << "trees-examined: " << v.stats.trees_examined << '\n';
  out << "elapsed-seconds: " << v.stats.elapsed_seconds << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Batch runs.  Manifest lines are "<instance-path> <problem> <algorithm>"
// with '#' comments; instance paths are resolved relative to `base_dir`.
// Rows run independently; a failing row reports an error and the batch
// continues.  Reports come back in manifest order regardless of job count.
// ---------------------------------------------------------------------------

struct RunReport {
  std::string instance;
  std::string problem;
  std::string algorithm;
  std::string answer;      // "yes", "no", or "error"
  std::string certificate; // witness, president, counterexample count, or error
  std::uint64_t nominations_examined = 0;
  std::uint64_t trees_examined = 0;
  double elapsed_seconds = 0.0;
};

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void write_text_file(const std::filesystem::path& path,
                            const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open file for writing: " + path.string());
  out << text;
}

namespace detail {

struct BatchRow {
  std::string instance;
  std::string problem;
  std::string algorithm;
};

inline std::vector<BatchRow> parse_manifest(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<BatchRow> rows;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    BatchRow row;
    if (!(ls >> row.instance)) continue;
    std::string extra;
    if (!(ls >> row.problem) || (ls >> row.algorithm && ls >> extra))
      parse_fail(line_no, "expected '<instance> <problem> [algorithm]'");
    if (row.algorithm.empty()) row.algorithm = "auto";
    rows.push_back(std::move(row));
  }
  return rows;
}

inline RunReport run_batch_row(const BatchRow& row,
                               const std::filesystem::path& base_dir,
                               std::uint64_t budget) {
  RunReport report;
  report.instance = row.instance;
  report.problem = row.problem;
  report.algorithm = row.algorithm;
  try {
    const PartyElection pe =
        parse_party_election(read_text_file(base_dir / row.instance));
    const Verdict v = solve(pe, parse_problem(row.problem),
                            parse_algorithm(row.algorithm), budget);
    report.answer = v.answer ? "yes" : "no";
    const auto name = [&](int c) {
      return pe.election.candidates[static_cast<std::size_t>(c)];
    };
    std::string cert;
    if (v.witness) {
      for (int c : v.witness->by_party) {
        if (!cert.empty()) cert += ' ';
        cert += name(c);
      }
    } else if (v.necessary_candidate) {
      cert = "president " + name(*v.necessary_candidate);
    } else if (!v.counterexamples.empty()) {
      cert = std::to_string(v.counterexamples.size()) + " counterexample" +
             (v.counterexamples.size() == 1 ? "" : "s");
    }
    report.certificate = cert;
    report.algorithm = v.algorithm;  // resolved name when "auto" was asked
    report.nominations_examined = v.stats.nominations_examined;
    report.trees_examined = v.stats.trees_examined;
    report.elapsed_seconds = v.stats.elapsed_seconds;
  } catch (const std::exception& error) {
    report.answer = "error";
    std::string message = error.what();
    for (char& ch : message)
      if (ch == '\t' || ch == '\n') ch = ' ';
    report.certificate = message;
  }
  return report;
}

}  // namespace detail

inline std::vector<RunReport> run_batch(const std::string& manifest_text,
                                        const std::filesystem::path& base_dir,
                                        int jobs = 1,
                                        std::uint64_t budget = kDefaultNominationBudget) {
  const auto rows = detail::parse_manifest(manifest_text);
  std::vector<RunReport> reports(rows.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < rows.size(); ++i)
      reports[i] = detail::run_batch_row(rows[i], base_dir, budget);
    return reports;
  }
  std::atomic<std::size_t> cursor{0};
  const auto worker = [&] {
    while (true) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= rows.size()) return;
      reports[i] = detail::run_batch_row(rows[i], base_dir, budget);
    }
  };
  std::vector<std::thread> pool;
  const int thread_count = std::min<int>(jobs, static_cast<int>(rows.size()));
  pool.reserve(static_cast<std::size_t>(thread_count));
  for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
  for (auto& thread : pool) thread.join();
  return reports;
}

inline std::string format_reports_tsv(const std::vector<RunReport>& reports) {
  std::ostringstream out;
  out << "instance\tproblem\talgorithm\tanswer\tcertificate\t"
         "nominations\ttrees\tseconds\n";
  for (const auto& r : reports)
    out << r.instance << '\t' << r.problem << '\t' << r.algorithm << '\t'
        << r.answer << '\t' << r.certificate << '\t' << r.nominations_examined
        << '\t' << r.trees_examined << '\t' << r.elapsed_seconds << '\n';
  return out.str();
}

}  // namespace president
