#include "cesr/text_format.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "cesr/error.hpp"

namespace cesr {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream words(raw);
    Line line{number, {}};
    std::string w;
    while (words >> w) line.words.push_back(w);
    if (line.words.empty() || line.words.front().front() == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

class Parser {
 public:
  explicit Parser(std::vector<Line> lines) : lines_(std::move(lines)) {}

  Document parse() {
    if (lines_.empty()) throw ParseError(1, "empty document");
    const auto& head = lines_.front();
    if (head.words.size() != 1) throw ParseError(head.number, "expected 'semiring', 'magma' or 'group'");
    kind_ = head.words[0];
    if (kind_ != "semiring" && kind_ != "magma" && kind_ != "group")
      throw ParseError(head.number, "unknown construct '" + kind_ + "'");

    for (pos_ = 1; pos_ < lines_.size();) {
      const auto& line = lines_[pos_];
      const auto& key = line.words[0];
      if (key == "order") {
        if (line.words.size() != 2) throw ParseError(line.number, "expected 'order <n>'");
        try {
          order_ = std::stoul(line.words[1]);
        } catch (const std::exception&) {
          throw ParseError(line.number, "bad order '" + line.words[1] + "'");
        }
        if (order_ == 0) throw ParseError(line.number, "order must be positive");
        if (order_ > kMaxTableOrder) throw ParseError(line.number, "order exceeds table limit");
        ++pos_;
      } else if (key == "elements") {
        need_order(line);
        labels_.assign(line.words.begin() + 1, line.words.end());
        if (labels_.size() != order_)
          throw ParseError(line.number, "expected " + std::to_string(order_) + " element labels");
        for (std::size_t i = 0; i < labels_.size(); ++i) {
          if (!index_.emplace(labels_[i], static_cast<Elem>(i)).second)
            throw ParseError(line.number, "duplicate label '" + labels_[i] + "'");
        }
        ++pos_;
      } else if (key == "zero" || key == "one" || key == "identity") {
        if (line.words.size() != 2) throw ParseError(line.number, "expected '" + key + " <label>'");
        singles_[key] = lookup(line, line.words[1]);
        ++pos_;
      } else if (key == "generators") {
        for (std::size_t i = 1; i < line.words.size(); ++i) generators_.push_back(lookup(line, line.words[i]));
        ++pos_;
      } else if (key == "add" || key == "mul" || key == "table") {
        if (line.words.size() != 1) throw ParseError(line.number, "rows of '" + key + "' start on the next line");
        need_labels(line);
        ++pos_;
        tables_[key] = read_table(line.number);
      } else {
        throw ParseError(line.number, "unknown keyword '" + key + "'");
      }
    }

    const std::size_t last = lines_.back().number;
    if (labels_.empty()) throw ParseError(last, "missing 'elements'");
    if (kind_ == "semiring") {
      for (const char* k : {"add", "mul"})
        if (!tables_.count(k)) throw ParseError(last, std::string("missing '") + k + "' table");
      for (const char* k : {"zero", "one"})
        if (!singles_.count(k)) throw ParseError(last, std::string("missing '") + k + "'");
      return FiniteSemiring(labels_, tables_["add"], tables_["mul"], singles_["zero"], singles_["one"]);
    }
    if (!tables_.count("table")) throw ParseError(last, "missing 'table'");
    if (kind_ == "magma") return MagmaDocument{FiniteMagma{labels_, tables_["table"]}, generators_};
    GroupDocument g{labels_, tables_["table"], std::nullopt};
    if (singles_.count("identity")) g.identity = singles_["identity"];
    return g;
  }

 private:
  void need_order(const Line& line) const {
    if (order_ == 0) throw ParseError(line.number, "'order' must come first");
  }
  void need_labels(const Line& line) const {
    if (labels_.empty()) throw ParseError(line.number, "'elements' must precede tables");
  }

  Elem lookup(const Line& line, const std::string& label) const {
    need_labels(line);
    auto it = index_.find(label);
    if (it == index_.end()) throw ParseError(line.number, "unknown element '" + label + "'");
    return it->second;
  }

  OpTable read_table(std::size_t header_line) {
    OpTable t(order_);
    for (std::size_t r = 0; r < order_; ++r, ++pos_) {
      if (pos_ >= lines_.size()) throw ParseError(header_line, "table ends after " + std::to_string(r) + " rows");
      const auto& row = lines_[pos_];
      if (row.words.size() != order_)
        throw ParseError(row.number, "row has " + std::to_string(row.words.size()) + " entries, expected " +
                                         std::to_string(order_));
      for (std::size_t c = 0; c < order_; ++c)
        t.set(static_cast<Elem>(r), static_cast<Elem>(c), lookup(row, row.words[c]));
    }
    return t;
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::string kind_;
  std::size_t order_ = 0;
  std::vector<std::string> labels_;
  std::map<std::string, Elem> index_;
  std::map<std::string, Elem> singles_;
  std::vector<Elem> generators_;
  std::map<std::string, OpTable> tables_;
};

void write_table(std::ostringstream& out, const char* name, const OpTable& t, const std::vector<std::string>& labels) {
  out << name << '\n';
  for (Elem x = 0; x < t.order(); ++x) {
    for (Elem y = 0; y < t.order(); ++y) out << (y ? " " : "") << labels[t(x, y)];
    out << '\n';
  }
}

void write_elements(std::ostringstream& out, const std::vector<std::string>& labels) {
  out << "order " << labels.size() << "\nelements";
  for (const auto& l : labels) out << ' ' << l;
  out << '\n';
}

}  // namespace

Document parse_document(std::string_view text) { return Parser(tokenize(text)).parse(); }

Document load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

std::string write_semiring(const FiniteSemiring& s) {
  std::ostringstream out;
  out << "semiring\n";
  write_elements(out, s.labels());
  out << "zero " << s.label(s.zero()) << "\none " << s.label(s.one()) << '\n';
  write_table(out, "add", s.add_table(), s.labels());
  write_table(out, "mul", s.mul_table(), s.labels());
  return out.str();
}

std::string write_magma(const FiniteMagma& m, const std::vector<Elem>& generators) {
  std::ostringstream out;
  out << "magma\n";
  write_elements(out, m.labels);
  if (!generators.empty()) {
    out << "generators";
    for (auto g : generators) out << ' ' << m.labels.at(g);
    out << '\n';
  }
  write_table(out, "table", m.table, m.labels);
  return out.str();
}

}  // namespace cesr
