#include "pawns/engine.hpp"

#include <sstream>

namespace pawns {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

[[noreturn]] void malformed(const Component& c, const std::string& why) {
  throw Error(ErrorKind::MalformedComponent, notation(c) + ": " + why);
}

void push_quiescent(EntailedOption& option, Word w) {
  if (!w.empty()) option.push_back(Quiescent{std::move(w)});
}

const char* colon_mark(bool underlined) { return underlined ? ":_" : ":"; }

}  // namespace

std::string notation(const Component& component) {
  return std::visit(
      Overloaded{
          [](const Quiescent& q) { return "[" + q.word.str() + "]"; },
          [](const ColonContext& c) { return std::string("[") + colon_mark(c.underlined) + c.tail.str() + "]"; },
          [](const DotColon& c) { return std::string("[.") + colon_mark(c.underlined) + c.tail.str() + "]"; },
          [](const BlockedColon& c) { return "[#:" + c.tail.str() + "]"; },
          [](const ColonDot& c) { return std::string("[") + colon_mark(c.underlined) + ".]"; },
          [](const Interior& c) {
            return "[" + c.left.str() + colon_mark(c.underlined) + c.right.str() + "]";
          },
      },
      component);
}

std::string notation(const EntailedOption& option) {
  if (option.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < option.size(); ++i) os << (i ? "+" : "") << notation(option[i]);
  return os.str();
}

std::vector<EntailedOption> entailed_options(const Component& component) {
  return std::visit(
      Overloaded{
          [&](const Quiescent&) -> std::vector<EntailedOption> {
            malformed(component, "a quiescent component entails nothing");
          },
          [&](const ColonContext& c) -> std::vector<EntailedOption> {
            const Word& t = c.tail;
            if (t.empty()) malformed(component, "empty tail");
            if (c.underlined && t.stopped(0)) malformed(component, "stopped file next to a stopped colon");
            const Word rest = t.subword(1, t.size());
            // Capture: the colon pawn is taken and re-taken.
            EntailedOption capture{ColonDot{c.underlined}};
            push_quiescent(capture, rest);
            // Advance the attacked pawn.
            EntailedOption advance;
            if (!rest.empty()) {
              if (c.underlined)
                advance.push_back(BlockedColon{rest});
              else
                advance.push_back(ColonContext{t.stopped(0), rest});
            }
            return {capture, advance};
          },
          [&](const DotColon& c) -> std::vector<EntailedOption> {
            if (c.tail.empty()) return {EntailedOption{}};
            if (c.underlined && c.tail.stopped(0)) malformed(component, "stopped file next to a stopped colon");
            return {EntailedOption{ColonContext{c.underlined, c.tail}}};
          },
          [&](const BlockedColon& c) -> std::vector<EntailedOption> {
            if (c.tail.empty()) malformed(component, "empty tail");
            if (c.tail.size() == 1) return {EntailedOption{}};
            return {EntailedOption{ColonContext{c.tail.stopped(0), c.tail.subword(1, c.tail.size())}}};
          },
          [](const ColonDot&) -> std::vector<EntailedOption> { return {EntailedOption{}}; },
          [&](const Interior& c) -> std::vector<EntailedOption> {
            if (c.left.empty() || c.right.empty()) malformed(component, "interior colon needs files on both sides");
            if (c.underlined && (c.left.stopped(c.left.size() - 1) || c.right.stopped(0)))
              malformed(component, "stopped file next to a stopped colon");
            // Either attacked pawn captures and the colon file re-captures.
            EntailedOption from_left;
            push_quiescent(from_left, c.left.subword(0, c.left.size() - 1));
            from_left.push_back(DotColon{c.underlined, c.right});
            EntailedOption from_right{DotColon{c.underlined, c.left.reversed()}};
            push_quiescent(from_right, c.right.subword(1, c.right.size()));
            return {from_left, from_right};
          },
      },
      component);
}

MoveClass classify_colon(const ColonContext& ctx, const EpsilonFn& epsilon) {
  const Word& t = ctx.tail;
  if (ctx.underlined && !t.empty() && t.stopped(0)) {
    throw Error(ErrorKind::InvariantViolation, "underlined colon with stopped tail " + t.str());
  }
  const std::size_t n = t.size();
  return colon_rule(
      ctx.underlined, n, [&] { return epsilon(t.subword(1, n)); },
      [&] {
        if (!ctx.underlined) return classify_colon({t.stopped(0), t.subword(1, n)}, epsilon);
        return classify_colon({t.stopped(1), t.subword(2, n)}, epsilon);
      });
}

namespace {

class ReferenceView {
 public:
  ReferenceView(const Word& w, const EpsilonFn& epsilon) : w_(w), epsilon_(epsilon) {}

  std::size_t size() const { return w_.size(); }
  bool stopped(std::size_t i) const { return w_.stopped(i); }
  Nimber eps_prefix(std::size_t n) const { return eps(w_.subword(0, n)); }
  Nimber eps_suffix(std::size_t s) const { return eps(w_.subword(s, w_.size())); }
  MoveClass colon_suffix(bool u, std::size_t s) const {
    return classify_colon({u, w_.subword(s, w_.size())}, epsilon_);
  }
  MoveClass colon_rprefix(bool u, std::size_t n) const {
    return classify_colon({u, w_.subword(0, n).reversed()}, epsilon_);
  }

 private:
  Nimber eps(const Word& w) const { return w.empty() ? 0 : epsilon_(w); }

  const Word& w_;
  const EpsilonFn& epsilon_;
};

}  // namespace

MoveClass classify_move(const MoveSite& site, const EpsilonFn& epsilon) {
  if (site.word.empty() || site.file >= site.word.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "file " + std::to_string(site.file) + " of word '" +
                                                site.word.str() + "'");
  }
  return classify_move_in(ReferenceView(site.word, epsilon), site.file);
}

}  // namespace pawns
