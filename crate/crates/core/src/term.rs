//! Terms, literals and universally quantified formulas over the signature
//! `(⊓, ⊔, ', 0, 1, <=, =)`.
//!
//! Concrete syntax, loosest to tightest: `->`, `forall x, y:`, `|`, `&`,
//! `~`, `<=` and `=`, then `^` (meet) and `v` (join) at one level, then
//! postfix `'`. Variables are `[a-z][a-z0-9]*` except the keywords `v` and
//! `forall`. Every variable not bound by `forall` is universally quantified
//! over the whole formula.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::directoid::InvolutiveDirectoid;
use crate::poset::BoundedInvolutivePoset;
use crate::subset::Element;
use crate::verdict::{Verdict, Witness};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Zero,
    One,
    Prime(Box<Term>),
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    Le(Term, Term),
    Eq(Term, Term),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Prop {
    Atom(Atom),
    Not(Box<Prop>),
    And(Box<Prop>, Box<Prop>),
    Or(Box<Prop>, Box<Prop>),
    Implies(Box<Prop>, Box<Prop>),
    Forall(Vec<String>, Box<Prop>),
}

/// A literal of a disjunctive normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Literal {
    pub positive: bool,
    pub atom: Atom,
}

/// A closed formula, optionally named.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Formula {
    pub label: Option<String>,
    pub body: Prop,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("{0} needs a directoid, not a bare poset")]
    SignatureMismatch(&'static str),
}

fn syntax(pos: usize, message: impl Into<String>) -> TermError {
    TermError::Syntax {
        pos,
        message: message.into(),
    }
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.into())
    }

    pub fn prime(self) -> Term {
        Term::Prime(Box::new(self))
    }

    pub fn meet(self, other: Term) -> Term {
        Term::Meet(Box::new(self), Box::new(other))
    }

    pub fn join(self, other: Term) -> Term {
        Term::Join(Box::new(self), Box::new(other))
    }

    /// Rewrites every `a v b` as `(a' ^ b')'`.
    pub fn expand_join(&self) -> Term {
        match self {
            Term::Var(_) | Term::Zero | Term::One => self.clone(),
            Term::Prime(t) => t.expand_join().prime(),
            Term::Meet(a, b) => a.expand_join().meet(b.expand_join()),
            Term::Join(a, b) => a
                .expand_join()
                .prime()
                .meet(b.expand_join().prime())
                .prime(),
        }
    }

    fn uses_lattice_ops(&self) -> bool {
        match self {
            Term::Var(_) | Term::Zero | Term::One => false,
            Term::Prime(t) => t.uses_lattice_ops(),
            Term::Meet(..) | Term::Join(..) => true,
        }
    }

    fn vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Zero | Term::One => {}
            Term::Prime(t) => t.vars(out),
            Term::Meet(a, b) | Term::Join(a, b) => {
                a.vars(out);
                b.vars(out);
            }
        }
    }
}

impl Atom {
    fn map_terms(&self, f: &impl Fn(&Term) -> Term) -> Atom {
        match self {
            Atom::Le(a, b) => Atom::Le(f(a), f(b)),
            Atom::Eq(a, b) => Atom::Eq(f(a), f(b)),
        }
    }

    fn terms(&self) -> [&Term; 2] {
        match self {
            Atom::Le(a, b) | Atom::Eq(a, b) => [a, b],
        }
    }
}

impl Prop {
    pub fn not(self) -> Prop {
        Prop::Not(Box::new(self))
    }

    pub fn and(self, other: Prop) -> Prop {
        Prop::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Prop) -> Prop {
        Prop::Or(Box::new(self), Box::new(other))
    }

    pub fn implies(self, other: Prop) -> Prop {
        Prop::Implies(Box::new(self), Box::new(other))
    }

    fn map_atoms(&self, f: &impl Fn(&Atom) -> Prop) -> Prop {
        match self {
            Prop::Atom(a) => f(a),
            Prop::Not(p) => p.map_atoms(f).not(),
            Prop::And(a, b) => a.map_atoms(f).and(b.map_atoms(f)),
            Prop::Or(a, b) => a.map_atoms(f).or(b.map_atoms(f)),
            Prop::Implies(a, b) => a.map_atoms(f).implies(b.map_atoms(f)),
            Prop::Forall(vs, p) => Prop::Forall(vs.clone(), Box::new(p.map_atoms(f))),
        }
    }

    fn atoms<'a>(&'a self, out: &mut Vec<&'a Atom>) {
        match self {
            Prop::Atom(a) => out.push(a),
            Prop::Not(p) | Prop::Forall(_, p) => p.atoms(out),
            Prop::And(a, b) | Prop::Or(a, b) | Prop::Implies(a, b) => {
                a.atoms(out);
                b.atoms(out);
            }
        }
    }

    fn has_forall(&self) -> bool {
        match self {
            Prop::Atom(_) => false,
            Prop::Forall(..) => true,
            Prop::Not(p) => p.has_forall(),
            Prop::And(a, b) | Prop::Or(a, b) | Prop::Implies(a, b) => {
                a.has_forall() || b.has_forall()
            }
        }
    }

    /// Disjunctive normal form as a list of conjunctions. `None` when the
    /// proposition contains an inner quantifier.
    pub fn to_dnf(&self) -> Option<Vec<Vec<Literal>>> {
        if self.has_forall() {
            return None;
        }
        Some(dnf(self, true))
    }
}

fn dnf(p: &Prop, positive: bool) -> Vec<Vec<Literal>> {
    match (p, positive) {
        (Prop::Atom(a), _) => vec![vec![Literal {
            positive,
            atom: a.clone(),
        }]],
        (Prop::Not(q), _) => dnf(q, !positive),
        (Prop::Or(a, b), true) | (Prop::And(a, b), false) => {
            let mut out = dnf(a, positive);
            out.extend(dnf(b, positive));
            out
        }
        (Prop::And(a, b), true) | (Prop::Or(a, b), false) => {
            let (l, r) = (dnf(a, positive), dnf(b, positive));
            let mut out = Vec::with_capacity(l.len() * r.len());
            for x in &l {
                for y in &r {
                    let mut c = x.clone();
                    c.extend(y.iter().cloned());
                    out.push(c);
                }
            }
            out
        }
        (Prop::Implies(a, b), true) => {
            let mut out = dnf(a, false);
            out.extend(dnf(b, true));
            out
        }
        (Prop::Implies(a, b), false) => {
            let (l, r) = (dnf(a, true), dnf(b, false));
            let mut out = Vec::new();
            for x in &l {
                for y in &r {
                    let mut c = x.clone();
                    c.extend(y.iter().cloned());
                    out.push(c);
                }
            }
            out
        }
        (Prop::Forall(..), _) => unreachable!("checked by to_dnf"),
    }
}

impl Formula {
    pub fn new(body: Prop) -> Formula {
        Formula { label: None, body }
    }

    /// Universally quantified variables, sorted.
    pub fn variables(&self) -> Vec<String> {
        fn go(p: &Prop, bound: &BTreeSet<String>, out: &mut BTreeSet<String>) {
            match p {
                Prop::Atom(a) => {
                    let mut vs = BTreeSet::new();
                    for t in a.terms() {
                        t.vars(&mut vs);
                    }
                    out.extend(vs.into_iter().filter(|v| !bound.contains(v)));
                }
                Prop::Not(q) => go(q, bound, out),
                Prop::And(a, b) | Prop::Or(a, b) | Prop::Implies(a, b) => {
                    go(a, bound, out);
                    go(b, bound, out);
                }
                Prop::Forall(vs, q) => {
                    let mut inner = bound.clone();
                    inner.extend(vs.iter().cloned());
                    go(q, &inner, out);
                }
            }
        }
        let mut out = BTreeSet::new();
        go(&self.body, &BTreeSet::new(), &mut out);
        out.into_iter().collect()
    }

    /// True when `^` or `v` occurs.
    pub fn uses_lattice_ops(&self) -> bool {
        let mut atoms = Vec::new();
        self.body.atoms(&mut atoms);
        atoms
            .iter()
            .any(|a| a.terms().iter().any(|t| t.uses_lattice_ops()))
    }

    /// True when an order literal `<=` occurs.
    pub fn uses_order(&self) -> bool {
        let mut atoms = Vec::new();
        self.body.atoms(&mut atoms);
        atoms.iter().any(|a| matches!(a, Atom::Le(..)))
    }

    /// Every `a <= b` becomes `a ^ b = a`; the propositional shape is kept.
    pub fn translate(&self) -> Formula {
        Formula {
            label: self.label.clone(),
            body: self.body.map_atoms(&|a| match a {
                Atom::Le(x, y) => Prop::Atom(Atom::Eq(x.clone().meet(y.clone()), x.clone())),
                eq => Prop::Atom(eq.clone()),
            }),
        }
    }

    /// Rewrites every join through meets and the involution.
    pub fn expand_joins(&self) -> Formula {
        Formula {
            label: self.label.clone(),
            body: self
                .body
                .map_atoms(&|a| Prop::Atom(a.map_terms(&|t| t.expand_join()))),
        }
    }
}

/// A structure a formula can be evaluated in.
#[derive(Clone, Copy, Debug)]
pub enum Structure<'a> {
    Poset(&'a BoundedInvolutivePoset),
    Directoid(&'a InvolutiveDirectoid),
}

impl Structure<'_> {
    fn size(&self) -> usize {
        match self {
            Structure::Poset(p) => p.size(),
            Structure::Directoid(d) => d.size(),
        }
    }
}

/// Variable-slot form used during evaluation.
enum Slot {
    Var(usize),
    Zero,
    One,
    Prime(Box<Slot>),
    Meet(Box<Slot>, Box<Slot>),
    Join(Box<Slot>, Box<Slot>),
}

enum CProp {
    Le(Slot, Slot),
    Eq(Slot, Slot),
    Not(Box<CProp>),
    And(Box<CProp>, Box<CProp>),
    Or(Box<CProp>, Box<CProp>),
    Implies(Box<CProp>, Box<CProp>),
    Forall(Vec<usize>, Box<CProp>),
}

struct Compiler {
    names: Vec<String>,
}

impl Compiler {
    fn slot(&mut self, name: &str, scope: &[(String, usize)]) -> usize {
        if let Some(&(_, s)) = scope.iter().rev().find(|(n, _)| n == name) {
            return s;
        }
        match self.names.iter().position(|n| n == name) {
            Some(i) => i,
            None => {
                self.names.push(name.into());
                self.names.len() - 1
            }
        }
    }

    fn term(&mut self, t: &Term, scope: &[(String, usize)]) -> Slot {
        match t {
            Term::Var(v) => Slot::Var(self.slot(v, scope)),
            Term::Zero => Slot::Zero,
            Term::One => Slot::One,
            Term::Prime(a) => Slot::Prime(Box::new(self.term(a, scope))),
            Term::Meet(a, b) => {
                Slot::Meet(Box::new(self.term(a, scope)), Box::new(self.term(b, scope)))
            }
            Term::Join(a, b) => {
                Slot::Join(Box::new(self.term(a, scope)), Box::new(self.term(b, scope)))
            }
        }
    }

    fn prop(&mut self, p: &Prop, scope: &mut Vec<(String, usize)>) -> CProp {
        match p {
            Prop::Atom(Atom::Le(a, b)) => CProp::Le(self.term(a, scope), self.term(b, scope)),
            Prop::Atom(Atom::Eq(a, b)) => CProp::Eq(self.term(a, scope), self.term(b, scope)),
            Prop::Not(q) => CProp::Not(Box::new(self.prop(q, scope))),
            Prop::And(a, b) => {
                CProp::And(Box::new(self.prop(a, scope)), Box::new(self.prop(b, scope)))
            }
            Prop::Or(a, b) => {
                CProp::Or(Box::new(self.prop(a, scope)), Box::new(self.prop(b, scope)))
            }
            Prop::Implies(a, b) => {
                CProp::Implies(Box::new(self.prop(a, scope)), Box::new(self.prop(b, scope)))
            }
            Prop::Forall(vs, q) => {
                let depth = scope.len();
                let mut slots = Vec::new();
                for v in vs {
                    // bound variables get fresh slots past the outer ones
                    self.names.push(format!("{v}#bound"));
                    let s = self.names.len() - 1;
                    scope.push((v.clone(), s));
                    slots.push(s);
                }
                let body = self.prop(q, scope);
                scope.truncate(depth);
                CProp::Forall(slots, Box::new(body))
            }
        }
    }
}

struct Evaluator<'a> {
    s: Structure<'a>,
    env: Vec<Element>,
}

impl Evaluator<'_> {
    fn term(&self, t: &Slot) -> Element {
        match (t, self.s) {
            (Slot::Var(i), _) => self.env[*i],
            (Slot::Zero, Structure::Poset(p)) => p.bottom(),
            (Slot::Zero, Structure::Directoid(d)) => d.zero(),
            (Slot::One, Structure::Poset(p)) => p.top(),
            (Slot::One, Structure::Directoid(d)) => d.one(),
            (Slot::Prime(a), Structure::Poset(p)) => p.inv(self.term(a)),
            (Slot::Prime(a), Structure::Directoid(d)) => d.inv(self.term(a)),
            (Slot::Meet(a, b), Structure::Directoid(d)) => d.meet(self.term(a), self.term(b)),
            (Slot::Join(a, b), Structure::Directoid(d)) => d.join(self.term(a), self.term(b)),
            (Slot::Meet(..) | Slot::Join(..), Structure::Poset(_)) => {
                unreachable!("signature checked before evaluation")
            }
        }
    }

    fn prop(&mut self, p: &CProp) -> bool {
        match p {
            CProp::Le(a, b) => {
                let (x, y) = (self.term(a), self.term(b));
                match self.s {
                    Structure::Poset(p) => p.le(x, y),
                    Structure::Directoid(d) => d.le(x, y),
                }
            }
            CProp::Eq(a, b) => self.term(a) == self.term(b),
            CProp::Not(q) => !self.prop(q),
            CProp::And(a, b) => self.prop(a) && self.prop(b),
            CProp::Or(a, b) => self.prop(a) || self.prop(b),
            CProp::Implies(a, b) => !self.prop(a) || self.prop(b),
            CProp::Forall(slots, q) => self.forall(slots, q),
        }
    }

    fn forall(&mut self, slots: &[usize], q: &CProp) -> bool {
        let Some((&first, rest)) = slots.split_first() else {
            return self.prop(q);
        };
        for x in 0..self.s.size() {
            self.env[first] = x;
            if !self.forall(rest, q) {
                return false;
            }
        }
        true
    }
}

/// Checks `f` by exhausting all assignments of its free variables, in
/// lexicographic order with variables sorted by name. Order literals in a
/// directoid use the induced order.
pub fn evaluate(s: Structure<'_>, f: &Formula) -> Result<Verdict, TermError> {
    if matches!(s, Structure::Poset(_)) && f.uses_lattice_ops() {
        return Err(TermError::SignatureMismatch("`^` or `v`"));
    }
    let vars = f.variables();
    let mut c = Compiler {
        names: vars.clone(),
    };
    let cp = c.prop(&f.body, &mut Vec::new());
    let n = s.size();
    let k = vars.len();
    let mut ev = Evaluator {
        s,
        env: vec![0; c.names.len()],
    };
    loop {
        if !ev.prop(&cp) {
            let w = Witness::new(
                vars.iter()
                    .map(|v| v.as_str())
                    .zip(ev.env[..k].iter().copied()),
            );
            return Ok(Verdict::Fails(w));
        }
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(Verdict::Holds);
            }
            i -= 1;
            ev.env[i] += 1;
            if ev.env[i] < n {
                break;
            }
            ev.env[i] = 0;
        }
    }
}

// ---------------------------------------------------------------- parsing

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Zero,
    One,
    Prime,
    Meet,
    Join,
    Le,
    Eq,
    Not,
    And,
    Or,
    Implies,
    LParen,
    RParen,
    Colon,
    Comma,
    Forall,
}

fn lex(text: &str, offset: usize) -> Result<Vec<(usize, Tok)>, TermError> {
    let mut out = Vec::new();
    let mut it = text.char_indices().peekable();
    while let Some((i, c)) = it.next() {
        let pos = offset + i;
        let tok = match c {
            c if c.is_whitespace() => continue,
            '\'' | '′' => Tok::Prime,
            '^' | '⊓' | '∧' => Tok::Meet,
            '⊔' | '∨' => Tok::Join,
            '=' | '≈' => Tok::Eq,
            '≤' => Tok::Le,
            '~' | '¬' => Tok::Not,
            '&' => Tok::And,
            '|' => Tok::Or,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ':' => Tok::Colon,
            ',' => Tok::Comma,
            '0' => Tok::Zero,
            '1' => Tok::One,
            '→' => Tok::Implies,
            '<' => match it.next() {
                Some((_, '=')) => Tok::Le,
                _ => return Err(syntax(pos, "expected `<=`")),
            },
            '-' => match it.next() {
                Some((_, '>')) => Tok::Implies,
                _ => return Err(syntax(pos, "expected `->`")),
            },
            'a'..='z' => {
                let mut s = String::from(c);
                while let Some(&(_, d)) = it.peek() {
                    if d.is_ascii_lowercase() || d.is_ascii_digit() {
                        s.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                match s.as_str() {
                    "v" => Tok::Join,
                    "forall" => Tok::Forall,
                    _ => Tok::Ident(s),
                }
            }
            other => return Err(syntax(pos, format!("unexpected character `{other}`"))),
        };
        out.push((pos, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |&(p, _)| p)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &Tok, what: &str) -> Result<(), TermError> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(syntax(self.pos(), format!("expected {what}")))
        }
    }

    fn implication(&mut self) -> Result<Prop, TermError> {
        let a = self.quantified()?;
        if self.eat(&Tok::Implies) {
            let b = self.quantified()?;
            Ok(a.implies(b))
        } else {
            Ok(a)
        }
    }

    fn quantified(&mut self) -> Result<Prop, TermError> {
        if !self.eat(&Tok::Forall) {
            return self.disjunction();
        }
        let mut vars = Vec::new();
        loop {
            match self.peek() {
                Some(Tok::Ident(v)) => {
                    vars.push(v.clone());
                    self.at += 1;
                }
                _ => return Err(syntax(self.pos(), "expected a variable")),
            }
            if !self.eat(&Tok::Comma) {
                break;
            }
        }
        self.expect(&Tok::Colon, "`:`")?;
        let body = self.disjunction()?;
        Ok(Prop::Forall(vars, Box::new(body)))
    }

    fn disjunction(&mut self) -> Result<Prop, TermError> {
        let mut p = self.conjunction()?;
        while self.eat(&Tok::Or) {
            p = p.or(self.conjunction()?);
        }
        Ok(p)
    }

    fn conjunction(&mut self) -> Result<Prop, TermError> {
        let mut p = self.negation()?;
        while self.eat(&Tok::And) {
            p = p.and(self.negation()?);
        }
        Ok(p)
    }

    fn negation(&mut self) -> Result<Prop, TermError> {
        if self.eat(&Tok::Not) {
            return Ok(self.negation()?.not());
        }
        if self.peek() == Some(&Tok::LParen) {
            let save = self.at;
            if let Ok(lhs) = self.term() {
                if matches!(self.peek(), Some(Tok::Le | Tok::Eq)) {
                    return self.atom_rest(lhs);
                }
            }
            self.at = save + 1;
            let p = self.implication()?;
            self.expect(&Tok::RParen, "`)`")?;
            return Ok(p);
        }
        let lhs = self.term()?;
        self.atom_rest(lhs)
    }

    fn atom_rest(&mut self, lhs: Term) -> Result<Prop, TermError> {
        let le = match self.peek() {
            Some(Tok::Le) => true,
            Some(Tok::Eq) => false,
            _ => return Err(syntax(self.pos(), "expected `<=` or `=`")),
        };
        self.at += 1;
        let rhs = self.term()?;
        Ok(Prop::Atom(if le {
            Atom::Le(lhs, rhs)
        } else {
            Atom::Eq(lhs, rhs)
        }))
    }

    fn term(&mut self) -> Result<Term, TermError> {
        let mut t = self.primary()?;
        loop {
            if self.eat(&Tok::Meet) {
                t = t.meet(self.primary()?);
            } else if self.eat(&Tok::Join) {
                t = t.join(self.primary()?);
            } else {
                return Ok(t);
            }
        }
    }

    fn primary(&mut self) -> Result<Term, TermError> {
        let pos = self.pos();
        let tok = self.peek().cloned();
        self.at += 1;
        let mut t = match tok {
            Some(Tok::Ident(v)) => Term::Var(v),
            Some(Tok::Zero) => Term::Zero,
            Some(Tok::One) => Term::One,
            Some(Tok::LParen) => {
                let t = self.term()?;
                self.expect(&Tok::RParen, "`)`")?;
                t
            }
            _ => {
                self.at -= 1;
                return Err(syntax(pos, "expected a term"));
            }
        };
        while self.eat(&Tok::Prime) {
            t = t.prime();
        }
        Ok(t)
    }
}

/// Parses one formula, with an optional leading `[label]`.
pub fn parse(text: &str) -> Result<Formula, TermError> {
    let trimmed = text.trim_start();
    let mut offset = text.len() - trimmed.len();
    let mut body = trimmed;
    let mut label = None;
    if let Some(rest) = trimmed.strip_prefix('[') {
        let close = rest
            .find(']')
            .ok_or_else(|| syntax(offset, "unterminated label"))?;
        label = Some(rest[..close].trim().to_string());
        body = &rest[close + 1..];
        offset += close + 2;
    }
    let toks = lex(body, offset)?;
    if toks.is_empty() {
        return Err(syntax(offset, "empty formula"));
    }
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
    };
    let prop = p.implication()?;
    if p.at != p.toks.len() {
        return Err(syntax(p.pos(), "unexpected trailing input"));
    }
    Ok(Formula { label, body: prop })
}

/// Parses a formula file: one formula per line, `#` starts a comment.
/// Errors carry the 1-based line number.
pub fn parse_file(text: &str) -> Result<Vec<Formula>, (usize, TermError)> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let code = line.split('#').next().unwrap_or("");
        if code.trim().is_empty() {
            continue;
        }
        out.push(parse(code).map_err(|e| (i + 1, e))?);
    }
    Ok(out)
}

const CATALOG: &str = include_str!("catalog.pom");

/// The bundled axiom catalog.
pub fn catalog() -> Vec<Formula> {
    parse_file(CATALOG).expect("bundled catalog parses")
}

/// A catalog entry by label.
pub fn catalog_entry(label: &str) -> Option<Formula> {
    catalog()
        .into_iter()
        .find(|f| f.label.as_deref() == Some(label))
}

// ---------------------------------------------------------------- printing

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Zero => f.write_str("0"),
            Term::One => f.write_str("1"),
            Term::Prime(t) => match **t {
                Term::Meet(..) | Term::Join(..) => write!(f, "({t})'"),
                _ => write!(f, "{t}'"),
            },
            Term::Meet(a, b) | Term::Join(a, b) => {
                let op = if matches!(self, Term::Meet(..)) {
                    "^"
                } else {
                    "v"
                };
                for (i, t) in [a, b].into_iter().enumerate() {
                    if i == 1 {
                        write!(f, " {op} ")?;
                    }
                    match **t {
                        Term::Meet(..) | Term::Join(..) => write!(f, "({t})")?,
                        _ => write!(f, "{t}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Le(a, b) => write!(f, "{a} <= {b}"),
            Atom::Eq(a, b) => write!(f, "{a} = {b}"),
        }
    }
}

fn level(p: &Prop) -> u8 {
    match p {
        Prop::Implies(..) => 0,
        Prop::Forall(..) => 1,
        Prop::Or(..) => 2,
        Prop::And(..) => 3,
        Prop::Not(..) => 4,
        Prop::Atom(..) => 5,
    }
}

fn write_prop(f: &mut fmt::Formatter<'_>, p: &Prop, ctx: u8) -> fmt::Result {
    if level(p) < ctx {
        f.write_str("(")?;
        write_prop(f, p, 0)?;
        return f.write_str(")");
    }
    match p {
        Prop::Atom(a) => write!(f, "{a}"),
        Prop::Not(q) => {
            f.write_str("~")?;
            if matches!(**q, Prop::Not(_)) {
                write_prop(f, q, 4)
            } else {
                f.write_str("(")?;
                write_prop(f, q, 0)?;
                f.write_str(")")
            }
        }
        Prop::And(a, b) => {
            write_prop(f, a, 3)?;
            f.write_str(" & ")?;
            write_prop(f, b, 4)
        }
        Prop::Or(a, b) => {
            write_prop(f, a, 2)?;
            f.write_str(" | ")?;
            write_prop(f, b, 3)
        }
        Prop::Implies(a, b) => {
            write_prop(f, a, 1)?;
            f.write_str(" -> ")?;
            write_prop(f, b, 1)
        }
        Prop::Forall(vs, q) => {
            write!(f, "forall {}: ", vs.join(", "))?;
            write_prop(f, q, 2)
        }
    }
}

impl fmt::Display for Prop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_prop(f, self, 0)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = &self.label {
            write!(f, "[{l}] ")?;
        }
        write!(f, "{}", self.body)
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "{}", self.atom)
        } else {
            write!(f, "~({})", self.atom)
        }
    }
}
