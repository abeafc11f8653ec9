#include "farsinorm/cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "farsinorm/pipeline.h"
#include "farsinorm/utf8.h"

namespace farsinorm {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string config_path;
  std::string data_dir;
  std::string mode = "speech";
  std::optional<uint64_t> seed;
  size_t template_index = 0;
  std::vector<std::string> disabled;
  bool enumerate = false;
  std::string calendar = "solar";
  std::string url_words = "latin";
  size_t verb_threshold = 30;
  std::string input;
  std::string output;
  std::string gold;
};

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::multimap<std::string, std::string> read_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open config file: " + path);
  std::multimap<std::string, std::string> kv;
  std::string line;
  int n = 0;
  while (std::getline(f, line)) {
    ++n;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(n) + ": expected key=value");
    }
    kv.emplace(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return kv;
}

bool parse_bool(const std::string& v) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw UsageError("not a boolean: " + v);
}

uint64_t parse_uint(const std::string& key, const std::string& v) {
  try {
    size_t used = 0;
    const uint64_t x = std::stoull(v, &used);
    if (used != v.size() || v.starts_with('-')) throw std::invalid_argument(v);
    return x;
  } catch (const std::logic_error&) {
    throw UsageError(key + ": not a non-negative integer: " + v);
  }
}

Calendar parse_calendar(const std::string& v) {
  if (v == "solar") return Calendar::kSolarHijri;
  if (v == "gregorian") return Calendar::kGregorian;
  if (v == "lunar") return Calendar::kLunarHijri;
  throw UsageError("unknown calendar: " + v);
}

// Config file values fill whatever the command line left unset.
void apply_config(const std::multimap<std::string, std::string>& kv,
                  const CLI::App& app, Options& o) {
  const auto given = [&](const char* name) {
    for (const CLI::App* a : {&app, app.get_subcommands().empty()
                                        ? &app
                                        : app.get_subcommands().front()}) {
      try {
        if (a->get_option(name)->count() > 0) return true;
      } catch (const CLI::OptionNotFound&) {
      }
    }
    return false;
  };
  for (const auto& [key, value] : kv) {
    if (key == "mode") {
      if (!given("--mode")) o.mode = value;
    } else if (key == "seed") {
      if (!given("--seed")) o.seed = parse_uint(key, value);
    } else if (key == "template-index") {
      if (!given("--template-index")) o.template_index = parse_uint(key, value);
    } else if (key == "disable") {
      if (!given("--disable")) o.disabled.push_back(value);
    } else if (key == "enumerate") {
      if (!given("--enumerate")) o.enumerate = parse_bool(value);
    } else if (key == "calendar") {
      if (!given("--calendar")) o.calendar = value;
    } else if (key == "url-words") {
      if (!given("--url-words")) o.url_words = value;
    } else if (key == "verb-threshold") {
      if (!given("--verb-threshold")) o.verb_threshold = parse_uint(key, value);
    } else if (key == "data-dir") {
      if (!given("--data-dir")) o.data_dir = value;
    } else {
      throw UsageError("unknown config key: " + key);
    }
  }
}

PipelineConfig make_config(const Options& o) {
  PipelineConfig c;
  if (o.mode == "speech") {
    c.mode = Mode::kSpeech;
  } else if (o.mode == "general") {
    c.mode = Mode::kGeneral;
  } else {
    throw UsageError("unknown mode: " + o.mode);
  }
  if (o.seed) {
    c.policy = PolicyKind::kSeededRandom;
    c.seed = *o.seed;
  }
  c.template_index = o.template_index;
  c.calendar_default = parse_calendar(o.calendar);
  c.verb_split_threshold = o.verb_threshold;
  if (o.url_words != "latin" && o.url_words != "persian") {
    throw UsageError("url-words must be latin or persian");
  }
  c.persian_url_words = o.url_words == "persian";
  for (const auto& pass : o.disabled) {
    try {
      c.disable(pass);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return c;
}

class Streams {
 public:
  Streams(const Options& o, std::istream& in, std::ostream& out) {
    if (!o.input.empty() && o.input != "-") {
      file_in_ = std::make_unique<std::ifstream>(o.input, std::ios::binary);
      if (!*file_in_) throw IoError("cannot open input: " + o.input);
      in_ = file_in_.get();
    } else {
      in_ = &in;
    }
    if (!o.output.empty() && o.output != "-") {
      file_out_ = std::make_unique<std::ofstream>(o.output, std::ios::binary);
      if (!*file_out_) throw IoError("cannot open output: " + o.output);
      out_ = file_out_.get();
    } else {
      out_ = &out;
    }
  }

  std::istream& in() { return *in_; }
  std::ostream& out() { return *out_; }

  void finish() {
    out_->flush();
    if (!*out_) throw IoError("write failed");
    if (in_->bad()) throw IoError("read failed");
  }

 private:
  std::unique_ptr<std::ifstream> file_in_;
  std::unique_ptr<std::ofstream> file_out_;
  std::istream* in_ = nullptr;
  std::ostream* out_ = nullptr;
};

bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

void run_normalize(const Options& o, const Normalizer& norm, Streams& io) {
  std::string line;
  uint64_t line_no = 0;
  while (next_line(io.in(), line)) {
    if (o.enumerate) {
      for (const auto& v : norm.enumerate_verbalizations(line)) io.out() << v << '\n';
      io.out() << '\n';
    } else if (norm.config().mode == Mode::kGeneral) {
      io.out() << norm.normalize_general(std::string_view(line)) << '\n';
    } else {
      // One generator per line keeps the output independent of chunking.
      const uint64_t seed = norm.config().seed;
      std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                        static_cast<uint32_t>(line_no), static_cast<uint32_t>(line_no >> 32)};
      std::mt19937_64 rng(seq);
      io.out() << norm.normalize_speech(std::string_view(line), &rng) << '\n';
    }
    ++line_no;
  }
}

void run_split(const Normalizer& norm, Streams& io) {
  std::string line;
  while (next_line(io.in(), line)) {
    for (const auto& s : norm.split(line)) io.out() << s << '\n';
  }
}

void run_scan(const Normalizer& norm, Streams& io) {
  std::string line;
  while (next_line(io.in(), line)) {
    for (const auto& span : norm.scan(line)) {
      io.out() << span.start << '\t' << span.end << '\t' << class_name(span.cls) << '\t'
               << utf8_encode(span.raw) << '\n';
    }
  }
}

void run_eval(const Options& o, const Normalizer& norm, std::ostream& out) {
  std::ifstream f(o.gold, std::ios::binary);
  if (!f) throw IoError("cannot open gold file: " + o.gold);
  std::stringstream buf;
  buf << f.rdbuf();
  const auto paragraphs = parse_gold_paragraphs(buf.str());
  const auto report =
      evaluate_gold(paragraphs, norm.scanner(), norm.lexicon(), norm.segmenter_options());
  out << std::fixed;
  out.precision(4);
  out << report.accuracy << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Persian text normalization", "farsinorm"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--config", o.config_path, "key=value file of option defaults");
  app.add_option("--data-dir", o.data_dir, "directory overriding the built-in tables");

  auto* normalize = app.add_subcommand("normalize", "normalize text line by line");
  normalize->add_option("--mode", o.mode, "general or speech")
      ->check(CLI::IsMember({"general", "speech"}));
  normalize->add_option("--seed", o.seed, "pick templates at random with this seed");
  normalize->add_option("--template-index", o.template_index,
                        "template used for every span (default 0)");
  normalize->add_option("--disable", o.disabled, "pass to skip (repeatable)");
  normalize->add_flag("--enumerate", o.enumerate, "print every verbalization");
  normalize->add_option("--calendar", o.calendar, "calendar for ambiguous years")
      ->check(CLI::IsMember({"solar", "gregorian", "lunar"}));
  normalize->add_option("--url-words", o.url_words, "words for URL separators")
      ->check(CLI::IsMember({"latin", "persian"}));
  normalize->add_option("--out", o.output, "output file");
  normalize->add_option("input", o.input, "input file (default stdin)");

  auto* split = app.add_subcommand("split", "one sentence per line");
  split->add_option("--verb-threshold", o.verb_threshold,
                    "re-split segments longer than this many tokens");
  split->add_option("--out", o.output, "output file");
  split->add_option("input", o.input, "input file (default stdin)");

  auto* eval = app.add_subcommand("eval-split", "segmentation accuracy on a gold file");
  eval->add_option("--verb-threshold", o.verb_threshold,
                   "re-split segments longer than this many tokens");
  eval->add_option("gold", o.gold, "gold file")->required();

  auto* scan = app.add_subcommand("scan", "list semiotic spans");
  scan->add_option("--calendar", o.calendar, "calendar for ambiguous years")
      ->check(CLI::IsMember({"solar", "gregorian", "lunar"}));
  scan->add_option("--out", o.output, "output file");
  scan->add_option("input", o.input, "input file (default stdin)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!o.config_path.empty()) apply_config(read_config(o.config_path), app, o);
    const PipelineConfig config = make_config(o);

    std::optional<ResourceBundle> bundle;
    if (!o.data_dir.empty()) bundle = ResourceBundle::from_directory(o.data_dir);
    const Normalizer norm(config, bundle ? *bundle : ResourceBundle::embedded());

    if (eval->parsed()) {
      run_eval(o, norm, out);
      return kExitOk;
    }
    Streams io(o, in, out);
    if (normalize->parsed()) {
      run_normalize(o, norm, io);
    } else if (split->parsed()) {
      run_split(norm, io);
    } else {
      run_scan(norm, io);
    }
    io.finish();
  } catch (const UsageError& e) {
    err << "farsinorm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EnumerationLimitError& e) {
    err << "farsinorm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "farsinorm: " << e.what() << '\n';
    return kExitIo;
  } catch (const ResourceError& e) {
    err << "farsinorm: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace farsinorm
