//! Deterministic generation of well-typed expressions and matching
//! valuations, for property testing evaluation totality. Divisors are
//! generated as non-zero literals so division never faults.

use crate::ast::{BinaryOp, Expr, ExprKind, UnaryOp};
use crate::eval::{Valuation, Value};
use crate::types::{ConstantLookup, ExprContext, ExprType, FieldLookup, NameLookup};
use kernel::Span;

/// A self-contained typing environment: named values of each primitive
/// type plus one enum. Doubles as the [`ExprContext`] for checking what
/// was generated.
pub struct TestEnv {
    pub names: Vec<(String, ExprType)>,
    pub enum_name: String,
    pub constants: Vec<String>,
}

impl Default for TestEnv {
    fn default() -> Self {
        TestEnv {
            names: vec![
                ("n".into(), ExprType::Int),
                ("m".into(), ExprType::Int),
                ("p".into(), ExprType::Bool),
                ("q".into(), ExprType::Bool),
                ("s".into(), ExprType::Str),
                ("mode".into(), ExprType::Named("Mode".into())),
            ],
            enum_name: "Mode".into(),
            constants: vec!["ON".into(), "OFF".into(), "IDLE".into()],
        }
    }
}

impl ExprContext for TestEnv {
    fn name_type(&self, name: &str) -> NameLookup {
        match self.names.iter().find(|(n, _)| n == name) {
            Some((_, t)) => NameLookup::Type(t.clone()),
            None => NameLookup::NotFound,
        }
    }
    fn constant_type(&self, enum_name: &str, constant: &str) -> ConstantLookup {
        if enum_name == self.enum_name && self.constants.iter().any(|c| c == constant) {
            ConstantLookup::Found(ExprType::Named(self.enum_name.clone()))
        } else {
            ConstantLookup::NotFound
        }
    }
    fn field_type(&self, _type_name: &str, _field: &str) -> FieldLookup {
        FieldLookup::UnknownField
    }
}

impl TestEnv {
    /// A valuation covering every name, derived from the seed.
    pub fn valuation(&self, seed: u64) -> Valuation {
        let mut rng = Lcg::new(seed);
        let mut v = Valuation::new();
        for (name, ty) in &self.names {
            let value = match ty {
                ExprType::Int => Value::Int((rng.next_u64() % 2001) as i64 - 1000),
                ExprType::Bool => Value::Bool(rng.next_u64() % 2 == 0),
                ExprType::Str => Value::Str(format!("s{}", rng.next_u64() % 4)),
                ExprType::Named(n) => {
                    let c = &self.constants[(rng.next_u64() as usize) % self.constants.len()];
                    Value::enumeration(n.clone(), c.clone())
                }
            };
            v.insert(name.clone(), value);
        }
        v
    }
}

/// Generate a well-typed expression of type `want` with the given depth
/// budget. Same seed, same expression.
pub fn gen_expr(env: &TestEnv, want: &ExprType, depth: u32, seed: u64) -> Expr {
    let mut rng = Lcg::new(seed);
    gen(env, want, depth, &mut rng)
}

fn sp() -> Span {
    Span::point("generated", 1, 1)
}

fn node(kind: ExprKind) -> Expr {
    Expr::new(kind, sp())
}

fn bin(op: BinaryOp, lhs: Expr, rhs: Expr) -> Expr {
    node(ExprKind::Binary { op, lhs: Box::new(lhs), rhs: Box::new(rhs) })
}

fn gen(env: &TestEnv, want: &ExprType, depth: u32, rng: &mut Lcg) -> Expr {
    if depth == 0 {
        return gen_leaf(env, want, rng);
    }
    match want {
        ExprType::Int => match rng.next_u64() % 6 {
            0 => gen_leaf(env, want, rng),
            1 => {
                let operand = gen(env, &ExprType::Int, depth - 1, rng);
                // Same folding as the parser, so printing round-trips.
                if let ExprKind::Int(v) = operand.kind {
                    node(ExprKind::Int(-v))
                } else {
                    node(ExprKind::Unary { op: UnaryOp::Neg, operand: Box::new(operand) })
                }
            }
            2 => {
                // Division and remainder take a non-zero literal divisor.
                let op = if rng.next_u64() % 2 == 0 { BinaryOp::Div } else { BinaryOp::Rem };
                let divisor = 1 + (rng.next_u64() % 9) as i64;
                bin(op, gen(env, &ExprType::Int, depth - 1, rng), node(ExprKind::Int(divisor)))
            }
            n => {
                let op = [BinaryOp::Add, BinaryOp::Sub, BinaryOp::Mul][n as usize % 3];
                bin(op, gen(env, &ExprType::Int, depth - 1, rng), gen(env, &ExprType::Int, depth - 1, rng))
            }
        },
        ExprType::Bool => match rng.next_u64() % 8 {
            0 => gen_leaf(env, want, rng),
            1 => node(ExprKind::Unary {
                op: UnaryOp::Not,
                operand: Box::new(gen(env, &ExprType::Bool, depth - 1, rng)),
            }),
            2 | 3 => {
                let op = [BinaryOp::Lt, BinaryOp::Le, BinaryOp::Gt, BinaryOp::Ge]
                    [(rng.next_u64() % 4) as usize];
                bin(op, gen(env, &ExprType::Int, depth - 1, rng), gen(env, &ExprType::Int, depth - 1, rng))
            }
            4 => {
                let operand_ty = rand_type(env, rng);
                let op = if rng.next_u64() % 2 == 0 { BinaryOp::Eq } else { BinaryOp::Ne };
                bin(op, gen(env, &operand_ty, depth - 1, rng), gen(env, &operand_ty, depth - 1, rng))
            }
            n => {
                let op = [BinaryOp::And, BinaryOp::Or, BinaryOp::Implies][n as usize % 3];
                bin(op, gen(env, &ExprType::Bool, depth - 1, rng), gen(env, &ExprType::Bool, depth - 1, rng))
            }
        },
        ExprType::Str | ExprType::Named(_) => gen_leaf(env, want, rng),
    }
}

fn rand_type(env: &TestEnv, rng: &mut Lcg) -> ExprType {
    match rng.next_u64() % 4 {
        0 => ExprType::Int,
        1 => ExprType::Bool,
        2 => ExprType::Str,
        _ => ExprType::Named(env.enum_name.clone()),
    }
}

fn gen_leaf(env: &TestEnv, want: &ExprType, rng: &mut Lcg) -> Expr {
    let named: Vec<_> = env.names.iter().filter(|(_, t)| t == want).collect();
    let use_name = !named.is_empty() && rng.next_u64() % 2 == 0;
    if use_name {
        let (name, _) = named[(rng.next_u64() as usize) % named.len()];
        return node(ExprKind::Name(name.clone()));
    }
    match want {
        ExprType::Int => node(ExprKind::Int((rng.next_u64() % 201) as i64 - 100)),
        ExprType::Bool => node(ExprKind::Bool(rng.next_u64() % 2 == 0)),
        ExprType::Str => node(ExprKind::Str(format!("s{}", rng.next_u64() % 4))),
        ExprType::Named(_) => {
            let c = &env.constants[(rng.next_u64() as usize) % env.constants.len()];
            node(ExprKind::Dotted { head: env.enum_name.clone(), member: c.clone() })
        }
    }
}

/// Small, dependency-free deterministic generator (64-bit LCG).
pub struct Lcg(u64);

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg(seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 11
    }
}
