//! The `.linf` definition language.
//!
//! ```text
//! lie so3 {
//!   basis e1 e2 e3;
//!   dual t1 t2 t3;
//!   bracket [e1,e2] = e3;
//!   form identity;
//! }
//! algebra a {
//!   gen t : 1;
//!   d t = 0;
//! }
//! ```
//!
//! Expressions use `+ - * ^`, parentheses, rational literals `p/q` and shifted
//! names `s(g)`. `#` starts a comment.

use std::fmt;
use std::sync::Arc;

use linf_core::gca::{DgcAlgebra, Generator, Poly, Signature};
use linf_core::lie::{ce_of_lie, BilinearForm, LieData};
use linf_core::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
}

impl ParseError {
    fn at(pos: Pos, message: impl Into<String>) -> Self {
        ParseError { pos, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.pos.line, self.pos.col, self.message)
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = Result<T, ParseError>;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(String),
    Sym(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(s) => write!(f, "`{s}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

fn lex(text: &str) -> PResult<Vec<(Tok, Pos)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let bump = |i: &mut usize, line: &mut usize, col: &mut usize| {
        if chars[*i] == '\n' {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
        *i += 1;
    };
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        if c.is_whitespace() {
            bump(&mut i, &mut line, &mut col);
        } else if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                bump(&mut i, &mut line, &mut col);
            }
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while i < chars.len() && chars[i].is_ascii_digit() {
                s.push(chars[i]);
                bump(&mut i, &mut line, &mut col);
            }
            out.push((Tok::Int(s), pos));
        } else if is_ident_start(c) {
            let name = lex_name(&chars, &mut i, &mut line, &mut col, pos)?;
            out.push((Tok::Ident(name), pos));
        } else if "+-*^/()[]{};:,=".contains(c) {
            out.push((Tok::Sym(c), pos));
            bump(&mut i, &mut line, &mut col);
        } else {
            return Err(ParseError::at(pos, format!("unexpected character `{c}`")));
        }
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}

/// An identifier, where `s(` opens a shifted name `s(inner)`.
fn lex_name(chars: &[char], i: &mut usize, line: &mut usize, col: &mut usize, pos: Pos) -> PResult<String> {
    let mut s = String::new();
    while *i < chars.len() && is_ident_char(chars[*i]) {
        s.push(chars[*i]);
        *i += 1;
        *col += 1;
    }
    if s == "s" && chars.get(*i) == Some(&'(') {
        *i += 1;
        *col += 1;
        if !chars.get(*i).is_some_and(|&c| is_ident_start(c)) {
            return Err(ParseError::at(Pos { line: *line, col: *col }, "expected a generator name inside s(..)"));
        }
        let inner = lex_name(chars, i, line, col, pos)?;
        if chars.get(*i) != Some(&')') {
            return Err(ParseError::at(Pos { line: *line, col: *col }, "unclosed s(.."));
        }
        *i += 1;
        *col += 1;
        return Ok(format!("s({inner})"));
    }
    Ok(s)
}

#[derive(Clone, Debug)]
enum Expr {
    Num(Rational),
    Var(String, Pos),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Vec<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    i: usize,
}

impl Parser {
    fn new(text: &str) -> PResult<Self> {
        Ok(Parser { toks: lex(text)?, i: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.i].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.i].1
    }

    fn next(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.i].clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn is_sym(&self, c: char) -> bool {
        *self.peek() == Tok::Sym(c)
    }

    fn expect_sym(&mut self, c: char) -> PResult<()> {
        if self.is_sym(c) {
            self.next();
            Ok(())
        } else {
            Err(ParseError::at(self.pos(), format!("expected `{c}`, found {}", self.peek())))
        }
    }

    fn ident(&mut self) -> PResult<(String, Pos)> {
        match self.next() {
            (Tok::Ident(s), p) => Ok((s, p)),
            (t, p) => Err(ParseError::at(p, format!("expected a name, found {t}"))),
        }
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        match self.next() {
            (Tok::Ident(s), _) if s == kw => Ok(()),
            (t, p) => Err(ParseError::at(p, format!("expected `{kw}`, found {t}"))),
        }
    }

    fn integer(&mut self) -> PResult<(String, Pos)> {
        match self.next() {
            (Tok::Int(s), p) => Ok((s, p)),
            (t, p) => Err(ParseError::at(p, format!("expected an integer, found {t}"))),
        }
    }

    /// `n` or `n/m` with `m ≠ 0`, optionally negated.
    fn rational(&mut self) -> PResult<Rational> {
        let neg = if self.is_sym('-') {
            self.next();
            true
        } else {
            false
        };
        let (n, p) = self.integer()?;
        let mut text = n;
        if self.is_sym('/') {
            self.next();
            let (d, _) = self.integer().map_err(|e| ParseError::at(e.pos, "malformed rational: expected a denominator"))?;
            if d.trim_start_matches('0').is_empty() {
                return Err(ParseError::at(p, "malformed rational: zero denominator"));
            }
            text = format!("{text}/{d}");
        }
        let r: Rational = text.parse().map_err(|_| ParseError::at(p, "malformed rational"))?;
        Ok(if neg { -r } else { r })
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut lhs = if self.is_sym('-') {
            self.next();
            Expr::Neg(Box::new(self.term()?))
        } else {
            if self.is_sym('+') {
                self.next();
            }
            self.term()?
        };
        loop {
            if self.is_sym('+') {
                self.next();
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.is_sym('-') {
                self.next();
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut factors = vec![self.factor()?];
        while self.is_sym('*') {
            self.next();
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 { factors.pop().expect("one factor") } else { Expr::Mul(factors) })
    }

    fn factor(&mut self) -> PResult<Expr> {
        let base = self.atom()?;
        if self.is_sym('^') {
            self.next();
            let (e, p) = self.integer()?;
            let e: u32 = e.parse().map_err(|_| ParseError::at(p, "exponent too large"))?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> PResult<Expr> {
        match self.peek().clone() {
            Tok::Int(_) => Ok(Expr::Num(self.rational()?)),
            Tok::Ident(_) => {
                let (name, p) = self.ident()?;
                Ok(Expr::Var(name, p))
            }
            Tok::Sym('(') => {
                self.next();
                let e = self.expr()?;
                self.expect_sym(')')?;
                Ok(e)
            }
            t => Err(ParseError::at(self.pos(), format!("expected an expression, found {t}"))),
        }
    }

    fn at_eof(&self) -> bool {
        *self.peek() == Tok::Eof
    }
}

fn eval(e: &Expr, sig: &Arc<Signature>) -> PResult<Poly<Rational>> {
    Ok(match e {
        Expr::Num(r) => Poly::constant(sig, r.clone()),
        Expr::Var(name, p) => match sig.index_of(name) {
            Some(i) => Poly::generator(sig, i),
            None => return Err(ParseError::at(*p, format!("unknown generator `{name}`"))),
        },
        Expr::Neg(a) => -eval(a, sig)?,
        Expr::Add(a, b) => eval(a, sig)? + eval(b, sig)?,
        Expr::Sub(a, b) => eval(a, sig)? - eval(b, sig)?,
        Expr::Mul(fs) => {
            let mut seen: Vec<&str> = Vec::new();
            for f in fs {
                let (name, p, exp) = match f {
                    Expr::Var(n, p) => (n, p, 1),
                    Expr::Pow(b, e) => match b.as_ref() {
                        Expr::Var(n, p) => (n, p, *e),
                        _ => continue,
                    },
                    _ => continue,
                };
                if let Some(i) = sig.index_of(name) {
                    if sig.is_odd(i) && (exp > 1 || seen.contains(&name.as_str())) {
                        return Err(ParseError::at(*p, format!("odd generator `{name}` squared")));
                    }
                }
                seen.push(name);
            }
            let mut acc = Poly::one(sig);
            for f in fs {
                acc = &acc * &eval(f, sig)?;
            }
            acc
        }
        Expr::Pow(b, n) => {
            if let Expr::Var(name, p) = b.as_ref() {
                if *n > 1 && sig.index_of(name).is_some_and(|i| sig.is_odd(i)) {
                    return Err(ParseError::at(*p, format!("odd generator `{name}` squared")));
                }
            }
            eval(b, sig)?.pow(*n)
        }
    })
}

fn expr_pos(e: &Expr, fallback: Pos) -> Pos {
    match e {
        Expr::Var(_, p) => *p,
        Expr::Neg(a) | Expr::Pow(a, _) => expr_pos(a, fallback),
        Expr::Add(a, _) | Expr::Sub(a, _) => expr_pos(a, fallback),
        Expr::Mul(fs) => fs.first().map_or(fallback, |f| expr_pos(f, fallback)),
        Expr::Num(_) => fallback,
    }
}

/// Parses a polynomial expression over `sig`.
pub fn parse_poly(text: &str, sig: &Arc<Signature>) -> Result<Poly<Rational>, ParseError> {
    let mut p = Parser::new(text)?;
    let e = p.expr()?;
    if !p.at_eof() {
        return Err(ParseError::at(p.pos(), format!("unexpected {}", p.peek())));
    }
    eval(&e, sig)
}

#[derive(Clone, Debug, PartialEq)]
pub enum FormSpec {
    Identity,
    Matrix(Vec<Vec<Rational>>),
}

/// `bracket [x, y] = rhs` with `rhs` linear over the basis signature.
#[derive(Clone, Debug, PartialEq)]
pub struct Bracket {
    pub x: String,
    pub y: String,
    pub rhs: Poly<Rational>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LieBlock {
    pub name: String,
    pub basis: Vec<String>,
    pub dual: Vec<String>,
    pub brackets: Vec<Bracket>,
    pub form: Option<FormSpec>,
}

impl LieBlock {
    pub fn lie_data(&self) -> linf_core::Result<LieData<Rational>> {
        let idx = |n: &str| self.basis.iter().position(|b| b == n).expect("validated at parse time");
        let brackets: Vec<(usize, usize, Vec<(usize, Rational)>)> = self
            .brackets
            .iter()
            .map(|b| {
                let rhs = b.rhs.terms().map(|(m, c)| (m.factors()[0].0 as usize, c.clone())).collect();
                (idx(&b.x), idx(&b.y), rhs)
            })
            .collect();
        LieData::from_brackets(self.name.clone(), self.basis.clone(), self.dual.clone(), &brackets)
    }

    pub fn form(&self) -> linf_core::Result<Option<BilinearForm<Rational>>> {
        match &self.form {
            None => Ok(None),
            Some(FormSpec::Identity) => Ok(Some(BilinearForm::identity(self.basis.len()))),
            Some(FormSpec::Matrix(m)) => BilinearForm::new(m.clone()).map(Some),
        }
    }

    pub fn algebra(&self) -> linf_core::Result<DgcAlgebra<Rational>> {
        Ok(ce_of_lie(&self.lie_data()?)?.with_name(self.name.clone()))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraBlock {
    pub name: String,
    pub sig: Arc<Signature>,
    /// One differential per generator; undeclared ones are zero.
    pub d: Vec<Poly<Rational>>,
}

impl AlgebraBlock {
    pub fn from_algebra(a: &DgcAlgebra<Rational>, name: &str) -> Self {
        AlgebraBlock { name: name.to_string(), sig: a.sig().clone(), d: a.differentials().to_vec() }
    }

    pub fn algebra(&self) -> linf_core::Result<DgcAlgebra<Rational>> {
        DgcAlgebra::new(self.name.clone(), self.sig.clone(), self.d.clone())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Block {
    Lie(LieBlock),
    Algebra(AlgebraBlock),
}

impl Block {
    pub fn name(&self) -> &str {
        match self {
            Block::Lie(l) => &l.name,
            Block::Algebra(a) => &a.name,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct AlgebraFile {
    pub blocks: Vec<Block>,
}

impl AlgebraFile {
    pub fn block(&self, name: Option<&str>) -> Option<&Block> {
        match name {
            None => self.blocks.first(),
            Some(n) => self.blocks.iter().find(|b| b.name() == n),
        }
    }
}

pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile, ParseError> {
    let mut p = Parser::new(text)?;
    let mut file = AlgebraFile::default();
    while !p.at_eof() {
        let (kw, kp) = p.ident()?;
        let block = match kw.as_str() {
            "lie" => Block::Lie(lie_block(&mut p)?),
            "algebra" => Block::Algebra(algebra_block(&mut p)?),
            _ => return Err(ParseError::at(kp, format!("expected `lie` or `algebra`, found `{kw}`"))),
        };
        if file.blocks.iter().any(|b| b.name() == block.name()) {
            return Err(ParseError::at(kp, format!("duplicate block name `{}`", block.name())));
        }
        file.blocks.push(block);
    }
    Ok(file)
}

fn names_until_semi(p: &mut Parser) -> PResult<Vec<(String, Pos)>> {
    let mut out = Vec::new();
    while !p.is_sym(';') {
        out.push(p.ident()?);
    }
    p.next();
    Ok(out)
}

fn lie_block(p: &mut Parser) -> PResult<LieBlock> {
    let (name, np) = p.ident()?;
    p.expect_sym('{')?;
    let mut basis: Option<Vec<(String, Pos)>> = None;
    let mut dual: Option<Vec<(String, Pos)>> = None;
    let mut raw_brackets: Vec<(String, Pos, String, Pos, Expr, Pos)> = Vec::new();
    let mut form: Option<(FormSpec, Pos)> = None;
    while !p.is_sym('}') {
        let (kw, kp) = p.ident()?;
        match kw.as_str() {
            "basis" => basis = Some(names_until_semi(p)?),
            "dual" => dual = Some(names_until_semi(p)?),
            "bracket" => {
                p.expect_sym('[')?;
                let (x, xp) = p.ident()?;
                p.expect_sym(',')?;
                let (y, yp) = p.ident()?;
                p.expect_sym(']')?;
                p.expect_sym('=')?;
                let ep = p.pos();
                let e = p.expr()?;
                p.expect_sym(';')?;
                raw_brackets.push((x, xp, y, yp, e, ep));
            }
            "form" => {
                let f = if p.is_sym('[') {
                    p.next();
                    let mut rows = vec![vec![]];
                    loop {
                        rows.last_mut().expect("row").push(p.rational()?);
                        if p.is_sym(',') {
                            p.next();
                        } else if p.is_sym(';') {
                            p.next();
                            rows.push(vec![]);
                        } else {
                            p.expect_sym(']')?;
                            break;
                        }
                    }
                    FormSpec::Matrix(rows)
                } else {
                    p.keyword("identity")?;
                    FormSpec::Identity
                };
                p.expect_sym(';')?;
                form = Some((f, kp));
            }
            _ => return Err(ParseError::at(kp, format!("unknown lie statement `{kw}`"))),
        }
    }
    p.next();

    let basis = basis.ok_or_else(|| ParseError::at(np, "lie block needs a `basis`"))?;
    if basis.is_empty() {
        return Err(ParseError::at(np, "empty basis"));
    }
    let gens: Vec<Generator> = basis.iter().map(|(n, _)| Generator::new(n.clone(), 0)).collect();
    let bsig = Signature::new(gens).map_err(|e| ParseError::at(np, e.to_string()))?;
    let n = basis.len();
    let dual = match dual {
        Some(d) if d.len() != n => return Err(ParseError::at(np, format!("{} dual names for {n} basis elements", d.len()))),
        Some(d) => d.into_iter().map(|(s, _)| s).collect(),
        None => (1..=n).map(|i| format!("t{i}")).collect(),
    };
    let mut brackets: Vec<Bracket> = Vec::new();
    for (x, xp, y, yp, e, ep) in raw_brackets {
        for (g, gp) in [(&x, xp), (&y, yp)] {
            if bsig.index_of(g).is_none() {
                return Err(ParseError::at(gp, format!("unknown basis element `{g}`")));
            }
        }
        if brackets.iter().any(|b| (b.x == x && b.y == y) || (b.x == y && b.y == x)) {
            return Err(ParseError::at(xp, format!("bracket [{x},{y}] declared twice")));
        }
        let rhs = eval(&e, &bsig)?;
        if rhs.terms().any(|(m, _)| m.word_length() != 1) {
            return Err(ParseError::at(expr_pos(&e, ep), "bracket must be linear in the basis"));
        }
        brackets.push(Bracket { x, y, rhs });
    }
    let block = LieBlock {
        name,
        basis: basis.into_iter().map(|(s, _)| s).collect(),
        dual,
        brackets,
        form: form.as_ref().map(|(f, _)| f.clone()),
    };
    let data = block.lie_data().map_err(|e| ParseError::at(np, e.to_string()))?;
    if let Some((_, fp)) = &form {
        let f = block.form().map_err(|e| ParseError::at(*fp, e.to_string()))?.expect("form present");
        if f.matrix().len() != n {
            return Err(ParseError::at(*fp, format!("form must be {n}×{n}")));
        }
        if !f.is_invariant(&data) {
            return Err(ParseError::at(*fp, "bilinear form is not invariant"));
        }
    }
    Ok(block)
}

fn algebra_block(p: &mut Parser) -> PResult<AlgebraBlock> {
    let (name, _) = p.ident()?;
    p.expect_sym('{')?;
    let mut gens: Vec<(String, usize, Pos)> = Vec::new();
    let mut diffs: Vec<(String, Pos, Expr, Pos)> = Vec::new();
    while !p.is_sym('}') {
        let (kw, kp) = p.ident()?;
        match kw.as_str() {
            "gen" => {
                let (g, gp) = p.ident()?;
                p.expect_sym(':')?;
                let (deg, dp) = p.integer()?;
                let deg: usize = deg.parse().map_err(|_| ParseError::at(dp, "degree too large"))?;
                p.expect_sym(';')?;
                if gens.iter().any(|(n, _, _)| *n == g) {
                    return Err(ParseError::at(gp, format!("generator `{g}` declared twice")));
                }
                gens.push((g, deg, gp));
            }
            "d" => {
                let (g, gp) = p.ident()?;
                p.expect_sym('=')?;
                let ep = p.pos();
                let e = p.expr()?;
                p.expect_sym(';')?;
                diffs.push((g, gp, e, ep));
            }
            _ => return Err(ParseError::at(kp, format!("unknown algebra statement `{kw}`"))),
        }
    }
    p.next();
    let sig = Signature::new(gens.iter().map(|(n, d, _)| Generator::new(n.clone(), *d)).collect())
        .map_err(|e| ParseError::at(gens[0].2, e.to_string()))?;
    let mut d: Vec<Option<Poly<Rational>>> = vec![None; sig.len()];
    for (g, gp, e, ep) in diffs {
        let i = sig.index_of(&g).ok_or_else(|| ParseError::at(gp, format!("unknown generator `{g}`")))?;
        if d[i].is_some() {
            return Err(ParseError::at(gp, format!("d {g} declared twice")));
        }
        let v = eval(&e, &sig)?;
        let want = sig.degree(i) + 1;
        if !v.is_zero() && !v.is_homogeneous_of(want) {
            let found = v
                .homogeneous_degree()
                .map_or_else(|| "an inhomogeneous expression".to_string(), |k| format!("degree {k}"));
            return Err(ParseError::at(ep, format!("d {g} must have degree {want}, found {found}")));
        }
        d[i] = Some(v);
    }
    let d = d.into_iter().map(|p| p.unwrap_or_else(|| Poly::zero(&sig))).collect();
    Ok(AlgebraBlock { name, sig, d })
}

fn render_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn print_form(f: &FormSpec) -> String {
    match f {
        FormSpec::Identity => "identity".into(),
        FormSpec::Matrix(rows) => {
            let rows: Vec<String> =
                rows.iter().map(|r| r.iter().map(render_rational).collect::<Vec<_>>().join(", ")).collect();
            format!("[{}]", rows.join("; "))
        }
    }
}

pub fn print_block(b: &Block) -> String {
    let mut out = String::new();
    match b {
        Block::Lie(l) => {
            out.push_str(&format!("lie {} {{\n", l.name));
            out.push_str(&format!("  basis {};\n", l.basis.join(" ")));
            out.push_str(&format!("  dual {};\n", l.dual.join(" ")));
            for br in &l.brackets {
                out.push_str(&format!("  bracket [{},{}] = {};\n", br.x, br.y, br.rhs.render()));
            }
            if let Some(f) = &l.form {
                out.push_str(&format!("  form {};\n", print_form(f)));
            }
        }
        Block::Algebra(a) => {
            out.push_str(&format!("algebra {} {{\n", a.name));
            for g in a.sig.generators() {
                out.push_str(&format!("  gen {} : {};\n", g.name, g.degree));
            }
            for (g, p) in a.sig.generators().iter().zip(&a.d) {
                out.push_str(&format!("  d {} = {};\n", g.name, p.render()));
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn print_algebra_file(f: &AlgebraFile) -> String {
    f.blocks.iter().map(print_block).collect::<Vec<_>>().join("\n")
}

/// Bracket list of an existing Lie algebra, for printing.
pub fn lie_block_from_data(l: &LieData<Rational>, name: &str, identity_form: bool) -> LieBlock {
    let gens: Vec<Generator> = l.basis_names().iter().map(|n| Generator::new(n.clone(), 0)).collect();
    let bsig = Signature::new(gens).expect("distinct basis names");
    let brackets = l
        .brackets()
        .into_iter()
        .map(|(b, c, rhs)| {
            let mut p = Poly::zero(&bsig);
            for (a, x) in rhs {
                p = &p + &Poly::generator(&bsig, a).scale(&x);
            }
            Bracket { x: l.basis_names()[b].clone(), y: l.basis_names()[c].clone(), rhs: p }
        })
        .collect();
    LieBlock {
        name: name.to_string(),
        basis: l.basis_names().to_vec(),
        dual: l.dual_names().to_vec(),
        brackets,
        form: identity_form.then_some(FormSpec::Identity),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        let sig = Signature::new(vec![Generator::new("t", 1)]).unwrap();
        let p = parse_poly("-1/2*t + 3/4*t", &sig).unwrap();
        assert_eq!(p.render(), "1/4*t");
        assert!(parse_poly("1/0*t", &sig).unwrap_err().message.contains("zero denominator"));
        assert!(parse_poly("1/*t", &sig).unwrap_err().message.contains("malformed rational"));
    }

    #[test]
    fn shifted_names_lex_as_one_identifier() {
        let sig = Signature::new(vec![Generator::new("t", 1), Generator::new("s(t)", 2)]).unwrap();
        assert_eq!(parse_poly("s(t)^2 - t*s(t)", &sig).unwrap().render(), "-t*s(t) + s(t)^2");
    }
}
