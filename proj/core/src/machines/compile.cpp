#include "simlab/machines/compile.hpp"

#include "simlab/core/errors.hpp"

namespace simlab::machines {
namespace {

using rec::Term;
using Op = CmInstruction::Op;

// Every fragment computes its term into a fresh output register and leaves
// its argument registers unchanged, so projections can be passed by
// register instead of copied. Temporaries are zero on exit from a fragment.
class Compiler {
 public:
  CmProgram finish() {
    CmProgram p;
    p.registers = next_reg_;
    p.input = 0;
    p.output = 1;
    for (auto ins : code_) {
      if (ins.op == Op::decjz || ins.op == Op::jump) ins.target = labels_[ins.target];
      p.code.push_back(ins);
    }
    p.code.push_back({Op::halt, 0, 0});
    return p;
  }

  std::size_t fresh() { return next_reg_++; }

  void term(const Term& t, const std::vector<std::size_t>& args, std::size_t out) {
    switch (t.kind()) {
      case Term::Kind::zero: clear(out); return;
      case Term::Kind::succ:
        copy(args[0], out);
        emit(Op::inc, out);
        return;
      case Term::Kind::identity: copy(args[0], out); return;
      case Term::Kind::proj: copy(args[t.proj_index() - 1], out); return;
      case Term::Kind::constant: {
        const Nat& k = t.constant_value();
        if (k > 100000) throw CompileError("constant " + rec::to_string(t) + " is too large to unroll");
        clear(out);
        for (Nat i = 0; i < k; ++i) emit(Op::inc, out);
        return;
      }
      case Term::Kind::ack:
        throw CompileError("cannot compile ACK unless applied as (C ACK (K m) g)");
      case Term::Kind::comp: comp(t, args, out); return;
      case Term::Kind::primrec: primrec(t, args, out); return;
      case Term::Kind::mu: mu(t, args, out); return;
    }
  }

 private:
  std::size_t label() {
    labels_.push_back(0);
    return labels_.size() - 1;
  }
  void place(std::size_t l) { labels_[l] = code_.size(); }
  void emit(Op op, std::size_t reg = 0, std::size_t target = 0) { code_.push_back({op, reg, target}); }

  void clear(std::size_t r) {
    const std::size_t top = label(), done = label();
    place(top);
    emit(Op::decjz, r, done);
    emit(Op::jump, 0, top);
    place(done);
  }

  // dst := src, src := 0
  void move(std::size_t src, std::size_t dst) {
    clear(dst);
    const std::size_t top = label(), done = label();
    place(top);
    emit(Op::decjz, src, done);
    emit(Op::inc, dst);
    emit(Op::jump, 0, top);
    place(done);
  }

  // dst := src, src unchanged
  void copy(std::size_t src, std::size_t dst) {
    const std::size_t tmp = fresh();
    clear(dst);
    const std::size_t top = label(), back = label(), done = label();
    place(top);
    emit(Op::decjz, src, back);
    emit(Op::inc, dst);
    emit(Op::inc, tmp);
    emit(Op::jump, 0, top);
    place(back);
    emit(Op::decjz, tmp, done);
    emit(Op::inc, src);
    emit(Op::jump, 0, back);
    place(done);
  }

  // Register holding g(args), computing it if needed.
  std::size_t operand(const Term& g, const std::vector<std::size_t>& args) {
    if (g.kind() == Term::Kind::proj) return args[g.proj_index() - 1];
    if (g.kind() == Term::Kind::identity) return args[0];
    const std::size_t r = fresh();
    term(g, args, r);
    return r;
  }

  void comp(const Term& t, const std::vector<std::size_t>& args, std::size_t out) {
    const Term& f = t.head();
    if (f.kind() == Term::Kind::ack) {
      const Term& m = t.args()[0];
      if (m.kind() != Term::Kind::constant) {
        throw CompileError("cannot compile ACK with non-constant first argument in " + rec::to_string(t));
      }
      if (m.constant_value() > 16) {
        throw CompileError("ACK section too deep in " + rec::to_string(t));
      }
      const std::size_t n = operand(t.args()[1], args);
      ack(m.constant_value().convert_to<unsigned>(), n, out);
      return;
    }
    std::vector<std::size_t> regs;
    for (const auto& g : t.args()) regs.push_back(operand(g, args));
    term(f, regs, out);
  }

  // A(0, n) = n + 1;  A(m, n) = A(m-1)^(n+1)(1)
  void ack(unsigned m, std::size_t n, std::size_t out) {
    if (m == 0) {
      copy(n, out);
      emit(Op::inc, out);
      return;
    }
    const std::size_t count = fresh(), cur = fresh(), next = fresh();
    copy(n, count);
    emit(Op::inc, count);
    clear(cur);
    emit(Op::inc, cur);
    const std::size_t top = label(), done = label();
    place(top);
    emit(Op::decjz, count, done);
    ack(m - 1, cur, next);
    move(next, cur);
    emit(Op::jump, 0, top);
    place(done);
    move(cur, out);
  }

  void primrec(const Term& t, const std::vector<std::size_t>& args, std::size_t out) {
    const std::vector<std::size_t> rest(args.begin() + 1, args.end());
    const std::size_t count = fresh(), c = fresh(), acc = fresh();
    term(t.base(), rest, acc);
    copy(args[0], count);
    clear(c);
    std::vector<std::size_t> step_args{c, acc};
    step_args.insert(step_args.end(), rest.begin(), rest.end());

    const Term& step = t.step();
    const std::size_t top = label(), done = label();
    place(top);
    emit(Op::decjz, count, done);
    if (is_acc_succ(step)) {
      emit(Op::inc, acc);
    } else if (!(step.kind() == Term::Kind::proj && step.proj_index() == 2)) {
      const std::size_t next = fresh();
      term(step, step_args, next);
      move(next, acc);
    }
    emit(Op::inc, c);
    emit(Op::jump, 0, top);
    place(done);
    move(acc, out);
  }

  // (C S (P 2 k)): the step just increments the accumulator.
  static bool is_acc_succ(const Term& step) {
    if (step.kind() != Term::Kind::comp || step.head().kind() != Term::Kind::succ) return false;
    const Term& g = step.args()[0];
    return g.kind() == Term::Kind::proj && g.proj_index() == 2;
  }

  void mu(const Term& t, const std::vector<std::size_t>& args, std::size_t out) {
    const std::size_t i = fresh(), v = fresh();
    std::vector<std::size_t> body_args{i};
    body_args.insert(body_args.end(), args.begin(), args.end());
    clear(i);
    const std::size_t top = label(), found = label();
    place(top);
    term(t.head(), body_args, v);
    emit(Op::decjz, v, found);
    emit(Op::inc, i);
    emit(Op::jump, 0, top);
    place(found);
    move(i, out);
  }

  std::vector<CmInstruction> code_;
  std::vector<std::size_t> labels_;
  std::size_t next_reg_ = 2;
};

}  // namespace

CmProgram compile_rec_to_cm(const rec::Term& t) {
  if (t.arity() != 1) {
    throw CompileError("only unary terms compile to counter machines; " + rec::to_string(t) + " has arity " +
                       std::to_string(t.arity()));
  }
  Compiler c;
  c.term(t, {0}, 1);
  return c.finish();
}

}  // namespace simlab::machines
