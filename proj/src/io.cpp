#include "tauroot/io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "tauroot/error.hpp"

namespace tauroot {

namespace schema {

const Json& field(const Json& obj, const char* key, const std::string& where) {
  object_at(obj, where);
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(Errc::SchemaError, "missing field " + where + "." + key);
  return *it;
}

std::string string_at(const Json& j, const std::string& where) {
  if (!j.is_string()) throw Error(Errc::SchemaError, where + " must be a string");
  return j.get<std::string>();
}

int int_at(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw Error(Errc::SchemaError, where + " must be an integer");
  return j.get<int>();
}

const Json& array_at(const Json& j, const std::string& where) {
  if (!j.is_array()) throw Error(Errc::SchemaError, where + " must be an array");
  return j;
}

const Json& object_at(const Json& j, const std::string& where) {
  if (!j.is_object()) throw Error(Errc::SchemaError, where + " must be an object");
  return j;
}

}  // namespace schema

Json quiver_to_json(const ColoredQuiver& q) {
  Json out = Json::object();
  out["vertices"] = Json::array();
  for (const auto& v : q.vertices) {
    Json jv = Json::object();
    jv["id"] = v.id;
    if (v.level) jv["level"] = *v.level;
    if (v.group) jv["group"] = *v.group;
    out["vertices"].push_back(std::move(jv));
  }
  out["arrows"] = Json::array();
  for (const auto& a : q.arrows) {
    Json ja = Json::object();
    ja["src"] = a.src;
    ja["dst"] = a.dst;
    ja["color"] = a.color ? Json(*a.color) : Json(nullptr);
    ja["mult"] = a.mult;
    out["arrows"].push_back(std::move(ja));
  }
  return out;
}

ColoredQuiver quiver_from_json(const Json& j, const std::string& where) {
  using namespace schema;
  ColoredQuiver q;
  const auto& vs = array_at(field(j, "vertices", where), where + ".vertices");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string at = where + ".vertices[" + std::to_string(i) + "]";
    Vertex v;
    v.id = string_at(field(vs[i], "id", at), at + ".id");
    if (auto it = vs[i].find("level"); it != vs[i].end() && !it->is_null())
      v.level = int_at(*it, at + ".level");
    if (auto it = vs[i].find("group"); it != vs[i].end() && !it->is_null())
      v.group = int_at(*it, at + ".group");
    q.vertices.push_back(std::move(v));
  }
  const auto& as = array_at(field(j, "arrows", where), where + ".arrows");
  for (std::size_t i = 0; i < as.size(); ++i) {
    const std::string at = where + ".arrows[" + std::to_string(i) + "]";
    Arrow a;
    a.src = string_at(field(as[i], "src", at), at + ".src");
    a.dst = string_at(field(as[i], "dst", at), at + ".dst");
    if (auto it = as[i].find("color"); it != as[i].end() && !it->is_null())
      a.color = int_at(*it, at + ".color");
    a.mult = int_at(field(as[i], "mult", at), at + ".mult");
    q.arrows.push_back(std::move(a));
  }
  validate(q);
  return q;
}

std::string serialize(const ColoredQuiver& q) { return quiver_to_json(q).dump(); }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::ParseError, "at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

ColoredQuiver deserialize(std::string_view text) { return quiver_from_json(parse_json(text)); }

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_dot(const ColoredQuiver& q, const DotOptions& opts) {
  std::ostringstream os;
  os << "digraph " << dot_quote(opts.graph_name) << " {\n";
  for (const auto& v : q.vertices) os << "  " << dot_quote(v.id) << ";\n";
  for (const auto& a : q.arrows) {
    std::vector<std::string> attrs;
    const bool labelled = a.mult > 1 && !opts.repeat_multi_edges;
    if (labelled) attrs.push_back("label=\"×" + std::to_string(a.mult) + "\"");
    if (a.color) attrs.push_back("color=\"c" + std::to_string(*a.color) + "\"");
    std::string line = "  " + dot_quote(a.src) + " -> " + dot_quote(a.dst);
    if (!attrs.empty()) {
      line += " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) line += (i ? ", " : "") + attrs[i];
      line += "]";
    }
    line += ";\n";
    const int copies = labelled ? 1 : a.mult;
    for (int c = 0; c < copies; ++c) os << line;
  }
  os << "}\n";
  return os.str();
}

namespace {

// Minimal tokenizer/parser for the DOT subset produced by to_dot.
class DotReader {
 public:
  explicit DotReader(std::string_view text) : s_(text) {}

  ColoredQuiver read() {
    skip();
    std::string kw = identifier();
    if (kw == "strict") {
      skip();
      kw = identifier();
    }
    if (kw != "digraph") fail("expected 'digraph'");
    skip();
    if (peek() != '{') id();
    expect('{');
    for (;;) {
      skip();
      if (peek() == '}') {
        ++pos_;
        break;
      }
      if (eof()) fail("unterminated graph body");
      statement();
    }
    skip();
    if (!eof()) fail("trailing input after graph");
    validate(q_);
    return q_;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  ColoredQuiver q_;

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::ParseError, "DOT at byte " + std::to_string(pos_) + ": " + msg);
  }
  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return eof() ? '\0' : s_[pos_]; }

  void skip() {
    while (!eof()) {
      const char c = s_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#' || s_.substr(pos_, 2) == "//") {
        while (!eof() && s_[pos_] != '\n') ++pos_;
      } else if (s_.substr(pos_, 2) == "/*") {
        const auto end = s_.find("*/", pos_ + 2);
        if (end == std::string_view::npos) fail("unterminated comment");
        pos_ = end + 2;
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    std::string out;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
                      static_cast<unsigned char>(peek()) >= 0x80))
      out += s_[pos_++];
    return out;
  }

  std::string id() {
    skip();
    if (peek() == '"') {
      ++pos_;
      std::string out;
      while (!eof() && peek() != '"') {
        if (peek() == '\\' && pos_ + 1 < s_.size() &&
            (s_[pos_ + 1] == '"' || s_[pos_ + 1] == '\\'))
          ++pos_;
        out += s_[pos_++];
      }
      if (eof()) fail("unterminated string");
      ++pos_;
      return out;
    }
    if (peek() == '-' || peek() == '.' || std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string out;
      if (peek() == '-') out += s_[pos_++];
      while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.'))
        out += s_[pos_++];
      return out;
    }
    std::string out = identifier();
    if (out.empty()) fail("expected identifier");
    return out;
  }

  std::vector<std::pair<std::string, std::string>> attr_list() {
    std::vector<std::pair<std::string, std::string>> out;
    for (;;) {
      skip();
      if (peek() != '[') break;
      ++pos_;
      for (;;) {
        skip();
        if (peek() == ']') {
          ++pos_;
          break;
        }
        std::string key = id();
        expect('=');
        out.emplace_back(std::move(key), id());
        skip();
        if (peek() == ',' || peek() == ';') ++pos_;
      }
    }
    return out;
  }

  void declare(const std::string& v) {
    if (!q_.has_vertex(v)) q_.add_vertex(v);
  }

  void statement() {
    const std::string first = id();
    skip();
    if ((first == "node" || first == "edge" || first == "graph") && peek() == '[') {
      attr_list();
    } else if (peek() == '=') {
      ++pos_;
      id();
    } else {
      std::vector<std::string> chain{first};
      for (;;) {
        skip();
        if (s_.substr(pos_, 2) != "->") break;
        pos_ += 2;
        chain.push_back(id());
      }
      const auto attrs = attr_list();
      for (const auto& v : chain) declare(v);
      if (chain.size() > 1) {
        int mult = 1;
        std::optional<int> color;
        for (const auto& [k, v] : attrs) {
          if (k == "label") mult = parse_mult(v);
          if (k == "color") color = parse_color(v);
        }
        for (std::size_t i = 0; i + 1 < chain.size(); ++i)
          q_.add_arrow(chain[i], chain[i + 1], mult, color);
      }
    }
    skip();
    if (peek() == ';' || peek() == ',') ++pos_;
  }

  int parse_mult(const std::string& label) const {
    std::string digits = label;
    const std::string times = "×";
    if (digits.rfind(times, 0) == 0)
      digits = digits.substr(times.size());
    else if (!digits.empty() && digits[0] == 'x')
      digits = digits.substr(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      fail("edge label '" + label + "' is not a multiplicity");
    return std::stoi(digits);
  }

  std::optional<int> parse_color(const std::string& c) const {
    if (c.size() < 2 || c[0] != 'c' || c.find_first_not_of("0123456789", 1) != std::string::npos)
      return std::nullopt;
    return std::stoi(c.substr(1));
  }
};

}  // namespace

ColoredQuiver from_dot(std::string_view text) { return DotReader(text).read(); }

}  // namespace tauroot
