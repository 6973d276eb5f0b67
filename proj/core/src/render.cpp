#include "gnslab/render.hpp"

#include <charconv>
#include <vector>

#include "gnslab/error.hpp"

namespace gnslab {

namespace {

std::string raster(const SpaceTimeHistory& history, std::string header) {
  std::string out = std::move(header);
  out.reserve(out.size() + history.row_count() * (history.width() * 2 + 1) * 2);
  for (const auto& row : history.rows()) {
    bool first = true;
    for (Symbol s : row.cells()) {
      if (!first) out.push_back(' ');
      out += std::to_string(s);
      first = false;
    }
    out.push_back('\n');
  }
  return out;
}

std::string dimensions(const SpaceTimeHistory& h) {
  return std::to_string(h.width()) + " " + std::to_string(h.row_count()) + "\n";
}

// Whitespace/comment-aware token reader for plain netpbm headers.
class PnmScanner {
 public:
  explicit PnmScanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view token() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ' ' && text_[pos_] != '\t' && text_[pos_] != '\r' &&
           text_[pos_] != '\n' && text_[pos_] != '#') {
      ++pos_;
    }
    if (start == pos_) fail(ErrorKind::Parse, "image truncated at byte " + std::to_string(start));
    return text_.substr(start, pos_ - start);
  }

  std::size_t number() {
    const auto tok = token();
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      fail(ErrorKind::Parse, "expected a number in image, found '" + std::string(tok) + "'");
    }
    return v;
  }

  // P1 pixels need no separators.
  Symbol bit() {
    skip_space();
    if (pos_ >= text_.size()) fail(ErrorKind::Parse, "image truncated");
    const char c = text_[pos_++];
    if (c != '0' && c != '1') fail(ErrorKind::Parse, "invalid PBM pixel '" + std::string(1, c) + "'");
    return static_cast<Symbol>(c - '0');
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string render_pbm(const SpaceTimeHistory& history) {
  if (history.symbols() != 2) {
    fail(ErrorKind::UnsupportedAlphabet,
         "PBM holds only two symbols but k=" + std::to_string(history.symbols()) + "; render as PGM instead");
  }
  return raster(history, "P1\n" + dimensions(history));
}

std::string render_pgm(const SpaceTimeHistory& history) {
  if (history.symbols() > 256) {
    fail(ErrorKind::UnsupportedAlphabet, "PGM output supports k <= 256, got k=" + std::to_string(history.symbols()));
  }
  return raster(history, "P2\n" + dimensions(history) + std::to_string(history.symbols() - 1) + "\n");
}

std::string render_ascii(const SpaceTimeHistory& history, std::string_view charset) {
  if (charset.size() < static_cast<std::size_t>(history.symbols())) {
    fail(ErrorKind::Validation, "charset has " + std::to_string(charset.size()) + " characters but k=" +
                                    std::to_string(history.symbols()));
  }
  std::string out;
  out.reserve(history.row_count() * (history.width() + 1));
  for (const auto& row : history.rows()) {
    for (Symbol s : row.cells()) out.push_back(charset[s]);
    out.push_back('\n');
  }
  return out;
}

SpaceTimeHistory read_history_pnm(std::string_view text) {
  PnmScanner scan(text);
  const auto magic = scan.token();
  if (magic != "P1" && magic != "P2") fail(ErrorKind::Parse, "expected a plain PBM (P1) or PGM (P2) image");
  const bool bitmap = magic == "P1";
  const std::size_t width = scan.number();
  const std::size_t height = scan.number();
  if (width == 0 || height == 0) fail(ErrorKind::Parse, "image has zero width or height");
  int symbols = 2;
  if (!bitmap) {
    const std::size_t maxval = scan.number();
    if (maxval < 1 || maxval > 255) fail(ErrorKind::Parse, "PGM maxval must be in [1, 255]");
    symbols = static_cast<int>(maxval) + 1;
  }
  std::vector<Configuration> rows;
  rows.reserve(height);
  for (std::size_t y = 0; y < height; ++y) {
    std::vector<Symbol> cells(width);
    for (auto& c : cells) {
      if (bitmap) {
        c = scan.bit();
      } else {
        const auto v = scan.number();
        if (v >= static_cast<std::size_t>(symbols)) fail(ErrorKind::Parse, "PGM sample exceeds maxval");
        c = static_cast<Symbol>(v);
      }
    }
    rows.emplace_back(std::move(cells), symbols);
  }
  return SpaceTimeHistory(std::move(rows));
}

}  // namespace gnslab
