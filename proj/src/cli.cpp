#include "braid/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <set>

#include <json.hpp>

#include "braid/dehornoy.hpp"
#include "braid/ends.hpp"
#include "braid/planar.hpp"
#include "braid/torsion.hpp"
#include "braid/verify.hpp"

namespace braid::cli {

namespace {

using nlohmann::json;

struct Invocation {
  std::string verb;
  std::map<std::string, std::string> flags;
  bool json_mode = false;
  std::vector<std::string> head;  // positionals before --
  std::vector<std::string> tail;  // positionals after --
};

const std::set<std::string> kValueFlags = {"--n",     "--m",      "--variant",
                                           "--g",     "--seed",   "--trials",
                                           "--max-len", "--out"};

Invocation parse_args(const std::vector<std::string>& args) {
  Invocation inv;
  std::size_t i = 0;
  bool after_sep = false;
  while (i < args.size()) {
    const std::string& tok = args[i];
    if (!after_sep && tok == "--") {
      after_sep = true;
      ++i;
    } else if (!after_sep && tok == "--json") {
      inv.json_mode = true;
      ++i;
    } else if (!after_sep && kValueFlags.count(tok)) {
      if (i + 1 >= args.size())
        throw std::domain_error("flag " + tok + " needs a value");
      inv.flags[tok.substr(2)] = args[i + 1];
      i += 2;
    } else if (!after_sep && tok.rfind("--", 0) == 0 && tok.size() > 2) {
      throw std::domain_error("unknown flag " + tok);
    } else if (inv.verb.empty()) {
      inv.verb = tok;
      ++i;
      // two-token verb families
      if ((tok == "ends" || tok == "cm") && i < args.size()) {
        inv.verb += " " + args[i];
        ++i;
      }
    } else {
      (after_sep ? inv.tail : inv.head).push_back(tok);
      ++i;
    }
  }
  if (inv.verb.empty()) throw std::domain_error("missing verb");
  return inv;
}

int flag_int(const Invocation& inv, const std::string& name,
             std::optional<int> fallback = std::nullopt) {
  auto it = inv.flags.find(name);
  if (it == inv.flags.end()) {
    if (fallback) return *fallback;
    throw std::domain_error("--" + name + " is required");
  }
  try {
    return std::stoi(it->second);
  } catch (const std::exception&) {
    throw std::domain_error("bad value for --" + name);
  }
}

std::uint64_t flag_u64(const Invocation& inv, const std::string& name,
                       std::uint64_t fallback) {
  auto it = inv.flags.find(name);
  if (it == inv.flags.end()) return fallback;
  return std::stoull(it->second);
}

const std::string& positional(const Invocation& inv, std::size_t idx,
                              const char* what) {
  if (idx >= inv.head.size())
    throw std::domain_error(std::string("missing argument: ") + what);
  return inv.head[idx];
}

const std::string& payload(const Invocation& inv, std::size_t idx,
                           const char* what) {
  if (idx >= inv.tail.size())
    throw std::domain_error(std::string("missing argument after --: ") + what);
  return inv.tail[idx];
}

void emit(const Invocation& inv, std::ostream& out, const std::string& text,
          json record) {
  if (inv.json_mode) {
    record["verb"] = inv.verb;
    out << record.dump() << "\n";
  } else {
    out << text << "\n";
  }
}

int cmd_act(const Invocation& inv, std::ostream& out) {
  int n = flag_int(inv, "n");
  BraidWord b = parse_braid(positional(inv, 0, "braid"), n);
  FreeWord w = parse_word(payload(inv, 0, "word"), n);
  FreeWord image = apply_braid(w, b);
  emit(inv, out, format_word(image), {{"result", format_word(image)}});
  return 0;
}

// image tuples arrive as n positional words, or as n lines on stdin
std::vector<std::string> image_lines(const Invocation& inv, int n) {
  if (!inv.head.empty()) {
    if (static_cast<int>(inv.head.size()) != n)
      throw std::domain_error("expected exactly n image words");
    return inv.head;
  }
  std::vector<std::string> lines;
  std::string line;
  while (static_cast<int>(lines.size()) < n && std::getline(std::cin, line))
    lines.push_back(line);
  if (static_cast<int>(lines.size()) != n)
    throw std::domain_error("expected n image lines on stdin");
  return lines;
}

int cmd_recover(const Invocation& inv, std::ostream& out) {
  int n = flag_int(inv, "n");
  std::vector<FreeWord> images;
  for (const std::string& s : image_lines(inv, n)) images.push_back(parse_word(s, n));
  BraidWord b = recover_braid_word(BraidAutomorphism::from_images(images));
  emit(inv, out, format_braid(b), {{"result", format_braid(b)}});
  return 0;
}

int cmd_classify(const Invocation& inv, std::ostream& out) {
  int n = flag_int(inv, "n");
  BraidWord b = parse_braid(positional(inv, 0, "braid"), n);
  const char* cls = to_string(classify_sigma1(b));
  emit(inv, out, cls, {{"result", cls}});
  return 0;
}

int cmd_compare(const Invocation& inv, std::ostream& out) {
  int n = flag_int(inv, "n");
  BraidWord x = parse_braid(positional(inv, 0, "braid x"), n);
  BraidWord y = parse_braid(positional(inv, 1, "braid y"), n);
  const char* o = to_string(compare(x, y));
  emit(inv, out, o, {{"result", o}});
  return 0;
}

int cmd_neg_form(const Invocation& inv, std::ostream& out) {
  int n = flag_int(inv, "n");
  BraidWord b = parse_braid(positional(inv, 0, "braid"), n);
  BraidWord nf = sigma1_nonpositive_form(b);
  emit(inv, out, format_braid(nf), {{"result", format_braid(nf)}});
  return 0;
}

int cmd_ends_compare(const Invocation& inv, std::ostream& out) {
  int n = flag_int(inv, "n");
  End a = parse_end(positional(inv, 0, "end"), n);
  End b = parse_end(positional(inv, 1, "end"), n);
  const char* o = to_string(compare_ends(a, b));
  emit(inv, out, o, {{"result", o}});
  return 0;
}

int cmd_ends_act(const Invocation& inv, std::ostream& out) {
  int n = flag_int(inv, "n");
  BraidWord b = parse_braid(positional(inv, 0, "braid"), n);
  End e = parse_end(payload(inv, 0, "end"), n);
  End image = act_on_end(e, b);
  emit(inv, out, format_end(image), {{"result", format_end(image)}});
  return 0;
}

int cmd_ends_squarefree(const Invocation& inv, std::ostream& out) {
  int n = flag_int(inv, "n");
  End e = parse_end(positional(inv, 0, "end"), n);
  bool sf = end_is_squarefree(e);
  emit(inv, out, sf ? "SQUAREFREE" : "NOT SQUAREFREE", {{"result", sf}});
  return sf ? 0 : 1;
}

int cmd_ends_thurston(const Invocation& inv, std::ostream& out) {
  int n = flag_int(inv, "n");
  BraidWord x = parse_braid(positional(inv, 0, "braid x"), n);
  BraidWord y = parse_braid(positional(inv, 1, "braid y"), n);
  const char* o = to_string(thurston_compare(x, y));
  emit(inv, out, o, {{"result", o}});
  return 0;
}

int cmd_cm_act(const Invocation& inv, std::ostream& out) {
  int n = flag_int(inv, "n");
  int m = flag_int(inv, "m");
  BraidWord b = parse_braid(positional(inv, 0, "braid"), n);
  TorsionWord w = parse_torsion(payload(inv, 0, "torsion word"), m, n);
  TorsionWord image = tw_apply_braid(w, b);
  emit(inv, out, format_torsion(image), {{"result", format_torsion(image)}});
  return 0;
}

int cmd_cm_recover(const Invocation& inv, std::ostream& out) {
  int n = flag_int(inv, "n");
  int m = flag_int(inv, "m");
  std::vector<TorsionWord> images;
  for (const std::string& s : image_lines(inv, n))
    images.push_back(parse_torsion(s, m, n));
  BraidWord b = tw_recover_braid(images);
  emit(inv, out, format_braid(b), {{"result", format_braid(b)}});
  return 0;
}

int cmd_wada(const Invocation& inv, std::ostream& out) {
  int n = flag_int(inv, "n");
  int variant = flag_int(inv, "variant");
  int m = flag_int(inv, "m", 2);
  int strands = variant == 1 ? n : n + 1;
  BraidWord b = parse_braid(positional(inv, 0, "braid"), strands);
  FreeWord xw = parse_word(payload(inv, 0, "x-word"), n);
  FreeWord image = wada_action(xw, b, variant, m);
  emit(inv, out, format_word(image), {{"result", format_word(image)}});
  return 0;
}

int cmd_surface_check(const Invocation& inv, std::ostream& out) {
  int g = flag_int(inv, "g");
  RelationReport rep = surface_check(g);
  for (const std::string& f : rep.failures) out << "FAIL " << f << "\n";
  std::string summary = std::string(rep.ok() ? "PASS" : "FAIL") + " surface-check g=" +
                        std::to_string(g) + " (" + std::to_string(rep.checked) +
                        " identities)";
  emit(inv, out, summary,
       {{"result", rep.ok()}, {"checked", rep.checked}, {"failures", rep.failures}});
  return rep.ok() ? 0 : 1;
}

int cmd_planar(const Invocation& inv, std::ostream& out) {
  int n = flag_int(inv, "n");
  FreeWord w = parse_word(positional(inv, 0, "word"), n);
  auto emb = is_planar(w);
  if (inv.json_mode) {
    json rec{{"result", emb.has_value()}};
    if (emb) {
      rec["positions"] = emb->pi;
      rec["upper"] = emb->upper;
      rec["lower"] = emb->lower;
    }
    emit(inv, out, "", rec);
  } else {
    out << (emb ? "PLANAR" : "NOT PLANAR") << "\n";
  }
  return emb ? 0 : 1;
}

int cmd_diagram(const Invocation& inv, std::ostream& out) {
  int n = flag_int(inv, "n");
  auto it = inv.flags.find("out");
  if (it == inv.flags.end()) throw std::domain_error("--out FILE is required");
  FreeWord w = parse_word(positional(inv, 0, "word"), n);
  auto emb = is_planar(w);
  if (!emb) {
    out << "NOT PLANAR\n";
    return 1;
  }
  std::ofstream file(it->second, std::ios::binary);
  if (!file) throw std::domain_error("cannot open " + it->second);
  file << emit_diagram(*emb);
  emit(inv, out, "wrote " + it->second, {{"result", it->second}});
  return 0;
}

int cmd_orbit(const Invocation& inv, std::ostream& out) {
  int n = flag_int(inv, "n");
  FreeWord w = parse_word(positional(inv, 0, "word"), n);
  auto red = orbit_reduce(w);
  if (!red) {
    emit(inv, out, "NOT PLANAR", {{"result", nullptr}});
    return 1;
  }
  emit(inv, out,
       "k " + std::to_string(red->k) + "\nwitness " + format_braid(red->witness),
       {{"k", red->k}, {"witness", format_braid(red->witness)}});
  return 0;
}

int cmd_orbit_tuple(const Invocation& inv, std::ostream& out) {
  int n = flag_int(inv, "n");
  if (inv.head.empty()) throw std::domain_error("orbit-tuple needs words");
  std::vector<FreeWord> ws;
  for (const std::string& s : inv.head) ws.push_back(parse_word(s, n));
  auto wit = tuple_orbit_witness(ws);
  if (!wit) {
    emit(inv, out, "NONE", {{"result", nullptr}});
    return 1;
  }
  emit(inv, out, "witness " + format_braid(*wit),
       {{"witness", format_braid(*wit)}});
  return 0;
}

int cmd_verify(const Invocation& inv, std::ostream& out) {
  std::string suite = positional(inv, 0, "suite name");
  if (!verify::is_suite(suite)) throw std::domain_error("unknown suite '" + suite + "'");
  verify::Options opt;
  opt.n = flag_int(inv, "n", 4);
  opt.m = flag_int(inv, "m", 2);
  opt.seed = flag_u64(inv, "seed", 0);
  opt.trials = flag_int(inv, "trials", 200);
  opt.max_len = flag_int(inv, "max-len", 10);
  RelationReport rep = verify::run_suite(suite, opt);
  for (const std::string& f : rep.failures) out << "FAIL " << f << "\n";
  std::string summary = std::string(rep.ok() ? "PASS" : "FAIL") + " " + suite +
                        " (" + std::to_string(rep.checked) + " checks)";
  emit(inv, out, summary,
       {{"result", rep.ok()}, {"checked", rep.checked}, {"failures", rep.failures}});
  return rep.ok() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    Invocation inv = parse_args(args);
    if (inv.verb == "act") return cmd_act(inv, out);
    if (inv.verb == "recover") return cmd_recover(inv, out);
    if (inv.verb == "classify") return cmd_classify(inv, out);
    if (inv.verb == "compare") return cmd_compare(inv, out);
    if (inv.verb == "neg-form") return cmd_neg_form(inv, out);
    if (inv.verb == "ends compare") return cmd_ends_compare(inv, out);
    if (inv.verb == "ends act") return cmd_ends_act(inv, out);
    if (inv.verb == "ends squarefree") return cmd_ends_squarefree(inv, out);
    if (inv.verb == "ends thurston-compare") return cmd_ends_thurston(inv, out);
    if (inv.verb == "cm act") return cmd_cm_act(inv, out);
    if (inv.verb == "cm recover") return cmd_cm_recover(inv, out);
    if (inv.verb == "wada") return cmd_wada(inv, out);
    if (inv.verb == "surface-check") return cmd_surface_check(inv, out);
    if (inv.verb == "planar") return cmd_planar(inv, out);
    if (inv.verb == "diagram") return cmd_diagram(inv, out);
    if (inv.verb == "orbit") return cmd_orbit(inv, out);
    if (inv.verb == "orbit-tuple") return cmd_orbit_tuple(inv, out);
    if (inv.verb == "verify") return cmd_verify(inv, out);
    throw std::domain_error("unknown verb '" + inv.verb + "'");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace braid::cli
