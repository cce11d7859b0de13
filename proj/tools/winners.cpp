#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "riverput/ballots.hpp"
#include "riverput/io.hpp"
#include "riverput/oracle.hpp"
#include "riverput/putcheck.hpp"
#include "riverput/river.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitCapExceeded = 3;

std::vector<std::string> sorted_labels(const riverput::PreferenceProfile& p,
                                       const std::vector<int>& ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (int id : ids) out.push_back(p.label(id));
  std::sort(out.begin(), out.end());
  return out;
}

std::string joined(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i];
  }
  return out;
}

void print_scores_text(const riverput::PreferenceProfile& profile,
                       const std::vector<long long>& scores) {
  std::vector<std::string> labels = profile.labels();
  std::sort(labels.begin(), labels.end());
  std::cout << "scores:\n";
  for (const std::string& label : labels)
    std::cout << "  " << label << ": " << scores[*profile.index_of(label)]
              << "\n";
}

json scores_json(const riverput::PreferenceProfile& profile,
                 const std::vector<long long>& scores) {
  json out = json::object();
  for (int id = 0; id < profile.num_alternatives(); ++id)
    out[profile.label(id)] = scores[id];
  return out;
}

std::vector<int> top_ids(const std::vector<long long>& scores) {
  long long best = *std::max_element(scores.begin(), scores.end());
  std::vector<int> ids;
  for (int id = 0; id < static_cast<int>(scores.size()); ++id)
    if (scores[id] == best) ids.push_back(id);
  return ids;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

bool wants_dot(const std::string& path) {
  return path.size() >= 4 && path.substr(path.size() - 4) == ".dot";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Election winners from ranked ballot files"};
  app.get_formatter()->column_width(30);

  std::string input_path;
  std::string method;
  std::string tiebreak = "lex";
  std::uint64_t seed = 0;
  std::string certificate_path;
  std::string format = "text";
  bool condorcet_shortcut = false;
  std::uint64_t oracle_cap = riverput::kDefaultOrderingCap;

  app.add_option("input", input_path, "ballot file")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("-m,--method", method, "winner method")
      ->required()
      ->check(CLI::IsMember(
          {"condorcet", "plurality", "borda", "river", "river-put", "oracle"}));
  auto* tiebreak_opt =
      app.add_option("--tiebreak", tiebreak,
                     "edge ordering among tied margins (river only)")
          ->check(CLI::IsMember({"lex", "shuffle"}));
  auto* seed_opt =
      app.add_option("--seed", seed, "seed for --tiebreak shuffle");
  auto* cert_opt = app.add_option(
      "--certificate", certificate_path,
      "write the winner's diagram (river) or certificates (river-put); "
      ".dot selects Graphviz output, anything else JSON");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--condorcet-shortcut", condorcet_shortcut,
               "river-put: stop early when a Condorcet winner exists");
  app.add_option("--oracle-cap", oracle_cap,
                 "largest ordering count the oracle will enumerate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if ((tiebreak_opt->count() || seed_opt->count()) && method != "river") {
    std::cerr << "error: --tiebreak/--seed only apply to --method river\n";
    return kExitUsage;
  }
  if (cert_opt->count() && method != "river" && method != "river-put") {
    std::cerr << "error: --certificate only applies to river and river-put\n";
    return kExitUsage;
  }

  std::ifstream in(input_path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();

  try {
    const riverput::PreferenceProfile profile =
        riverput::parse_profile(buffer.str());
    const riverput::MarginGraph g = riverput::margin_graph(profile);
    const std::vector<std::string> labels = profile.labels();
    const bool as_json = format == "json";
    json out{{"method", method}};

    if (method == "condorcet") {
      std::optional<int> c = riverput::condorcet_winner(g);
      out["winners"] = c ? json::array({profile.label(*c)}) : json::array();
      if (!as_json)
        std::cout << (c ? profile.label(*c) : "no Condorcet winner") << "\n";
    } else if (method == "plurality" || method == "borda") {
      std::vector<long long> scores = method == "plurality"
                                          ? riverput::plurality_scores(profile)
                                          : riverput::borda_scores(profile);
      std::vector<std::string> winners = sorted_labels(profile, top_ids(scores));
      out["winners"] = winners;
      out["scores"] = scores_json(profile, scores);
      if (!as_json) {
        std::cout << joined(winners) << "\n";
        print_scores_text(profile, scores);
      }
    } else if (method == "river") {
      riverput::DescendingOrdering o = tiebreak == "lex"
                                           ? riverput::lex_ordering(g)
                                           : riverput::shuffled_ordering(g, seed);
      riverput::RiverDiagram d = riverput::river_fast(g, o);
      out["winners"] = json::array({profile.label(d.root)});
      out["tiebreak"] = tiebreak;
      if (tiebreak == "shuffle") out["seed"] = seed;
      out["diagram"] = riverput::diagram_to_json(g, d, labels);
      if (!as_json) std::cout << profile.label(d.root) << "\n";
      if (cert_opt->count())
        write_file(certificate_path,
                   wants_dot(certificate_path)
                       ? riverput::to_dot(g, d, labels)
                       : riverput::diagram_to_json(g, d, labels).dump(2) + "\n");
    } else if (method == "river-put") {
      riverput::PutResult result =
          riverput::river_put_winners(g, condorcet_shortcut);
      std::vector<std::string> winners = sorted_labels(profile, result.winners);
      out["winners"] = winners;
      out["condorcet_shortcut_used"] = result.condorcet_shortcut_used;
      json certs = json::array();
      for (const riverput::PutCertificate& cert : result.certificates)
        certs.push_back(riverput::certificate_to_json(g, cert, labels));
      out["certificates"] = certs;
      if (!as_json) std::cout << joined(winners) << "\n";
      if (cert_opt->count()) {
        if (wants_dot(certificate_path)) {
          std::string dot;
          for (const riverput::PutCertificate& cert : result.certificates)
            dot += riverput::to_dot(g, cert.diagram, labels);
          write_file(certificate_path, dot);
        } else {
          write_file(certificate_path, certs.dump(2) + "\n");
        }
      }
    } else {  // oracle
      std::cerr << "note: the oracle enumerates every descending ordering "
                   "(cap "
                << oracle_cap << "); expect exponential blowup on ties\n";
      riverput::OracleReport report =
          riverput::put_winners_bruteforce(g, oracle_cap);
      std::vector<std::string> winners = sorted_labels(profile, report.winners);
      out["winners"] = winners;
      out["orderings"] = report.ordering_count;
      if (!as_json) {
        std::cout << joined(winners) << "\n";
        std::cout << "orderings: " << report.ordering_count << "\n";
      }
    }

    if (as_json) std::cout << out.dump(2) << "\n";
    return kExitOk;
  } catch (const riverput::ParseError& e) {
    std::cerr << "error: " << input_path << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const riverput::TooManyOrderingsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
