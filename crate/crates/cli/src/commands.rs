//! Command handlers. Each returns the JSON report or a [`Failure`].

use constaring::field::quadratic_residues;
use constaring::gray::{
    phi_container_code, phi_container_poly, phi_image_code, phi_poly, psi_image_code, PsiMatrix,
};
use constaring::poly::factor_xn_pm1;
use constaring::qr::{self, label_string, parse_label, Report};
use constaring::rcode::{consta_build, count_constacyclic, equivalent_to_cyclic, factor_counts};
use constaring::{Family, FpPoly, PrimeField, QRMask, QRSystem, Ring};
use serde_json::{json, Value};

use crate::render::{self, tagged};
use crate::{
    CodeSelector, Command, ConstaCommand, Failure, GeneratorArgs, QrArgs, QrCommand, RingCommand, Suite,
};

type Outcome = Result<Value, Failure>;

pub fn run(cmd: &Command) -> Outcome {
    match cmd {
        Command::Factor { p, n, sign } => factor(*p, *n, *sign),
        Command::Consta(c) => consta(c),
        Command::Qr(c) => qr_cmd(c),
        Command::Examples { fixtures, theta } => crate::examples::run(fixtures.as_deref(), *theta),
        Command::Ring(c) => ring_cmd(c),
    }
}

fn field(p: u64) -> Result<PrimeField, Failure> {
    Ok(PrimeField::new(p)?)
}

fn ring(p: u64) -> Result<Ring, Failure> {
    Ok(Ring::new(field(p)?)?)
}

/// Parses `"1,-3,1"` into a polynomial over F_p, constant term first.
pub fn parse_poly(s: &str, p: u64) -> Result<FpPoly, Failure> {
    let coeffs = s
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure::Usage(format!("bad coefficient list {s:?}")))?;
    Ok(FpPoly::from_i64(p, &coeffs))
}

fn factor(p: u64, n: usize, sign: i8) -> Outcome {
    let f = field(p)?;
    let factors = factor_xn_pm1(n, sign, &f)?;
    let mut payload = json!({
        "p": p,
        "n": n,
        "sign": sign,
        "factors": render::polys(&factors),
        "count": factors.len(),
    });
    if p % 3 == 1 {
        let (r1, r2) = factor_counts(n, &f)?;
        payload["r1"] = json!(r1);
        payload["r2"] = json!(r2);
    }
    Ok(tagged("factor", payload))
}

fn generators(args: &GeneratorArgs, ring: &Ring) -> Result<[FpPoly; 4], Failure> {
    let p = ring.p();
    Ok([
        parse_poly(&args.g1, p)?,
        parse_poly(&args.g2, p)?,
        parse_poly(&args.g3, p)?,
        parse_poly(&args.g4, p)?,
    ])
}

fn consta(cmd: &ConstaCommand) -> Outcome {
    match cmd {
        ConstaCommand::Build(args) => {
            let r = ring(args.len.p)?;
            let (code, gens) = consta_build(&r, generators(args, &r)?, args.len.n)?;
            Ok(tagged(
                "consta build",
                json!({
                    "p": r.p(),
                    "n": gens.n,
                    "component_generators": render::polys(&gens.g),
                    "check_polynomials": render::polys(&gens.h),
                    "generator": render::rpoly(&gens.g_assembled, r.p()),
                    "degree_sum": gens.degree_sum(),
                    "code": render::r_code(&code),
                    "self_orthogonal": code.is_self_orthogonal(),
                    "self_dual": code.is_self_dual(),
                }),
            ))
        }
        ConstaCommand::Count(len) => {
            let f = field(len.p)?;
            let (r1, r2) = factor_counts(len.n, &f)?;
            let count = count_constacyclic(len.n, &f)?;
            Ok(tagged(
                "consta count",
                json!({ "p": len.p, "n": len.n, "r1": r1, "r2": r2, "count": count.to_string() }),
            ))
        }
        ConstaCommand::Dual(args) => {
            let r = ring(args.len.p)?;
            let (code, gens) = consta_build(&r, generators(args, &r)?, args.len.n)?;
            let dual_gens = gens.dual(&r)?;
            let dual = code.dual();
            let (rebuilt, _) = consta_build(&r, dual_gens.g.clone(), gens.n)?;
            Ok(tagged(
                "consta dual",
                json!({
                    "p": r.p(),
                    "n": gens.n,
                    "dual_component_generators": render::polys(&dual_gens.g),
                    "dual_generator": render::rpoly(&dual_gens.g_assembled, r.p()),
                    "code_log_p_size": code.log_size(),
                    "dual": render::r_code(&dual),
                    "dual_matches_generator": rebuilt == dual,
                    "self_dual": code.is_self_dual(),
                }),
            ))
        }
        ConstaCommand::Gray { gens: args, cap } => {
            let r = ring(args.len.p)?;
            let f = *r.field();
            let (code, gens) = consta_build(&r, generators(args, &r)?, args.len.n)?;
            let image = phi_image_code(&code);
            let container = phi_container_code(&gens, &f)?;
            let min_distance = image.min_distance(*cap).ok().flatten();
            Ok(tagged(
                "consta gray",
                json!({
                    "p": r.p(),
                    "n": gens.n,
                    "image_of_generator": render::poly(&phi_poly(&gens.g_assembled, gens.n, &f)?),
                    "image": render::fp_code(&image, true),
                    "image_cyclic": image.is_cyclic(),
                    "container_generator": render::poly(&phi_container_poly(&gens)),
                    "container": render::fp_code(&container, false),
                    "contained": image.is_subcode_of(&container),
                    "min_distance": min_distance,
                }),
            ))
        }
        ConstaCommand::Equiv(len) => {
            let r = ring(len.p)?;
            let eq = equivalent_to_cyclic(len.n, r.field())?;
            Ok(tagged(
                "consta equiv",
                json!({
                    "p": len.p,
                    "n": len.n,
                    "equivalent": eq.is_equivalent(),
                    "witness": eq,
                    "unit": eq.unit(&r).map(|u| render::element(&u)),
                }),
            ))
        }
    }
}

fn system(args: &QrArgs) -> Result<QRSystem, Failure> {
    Ok(QRSystem::new(args.p, args.q, args.theta)?)
}

fn selection(sel: &CodeSelector) -> Result<Option<(Family, QRMask)>, Failure> {
    if let Some(label) = &sel.label {
        return Ok(Some(parse_label(label)?));
    }
    match &sel.mask {
        Some(m) => {
            let fam = match &sel.family {
                Some(f) => f.parse()?,
                None => Family::Q,
            };
            Ok(Some((fam, m.parse()?)))
        }
        None => Ok(None),
    }
}

/// Extended codes are indexed by the masks of the Q family.
fn extended_mask(sel: &CodeSelector) -> Result<QRMask, Failure> {
    match selection(sel)? {
        Some((Family::Q, m)) => Ok(m),
        Some((Family::S, _)) => {
            Err(Failure::Usage("extended codes are selected by a Q label or mask".into()))
        }
        None => Err(Failure::Usage("--label or --mask is required".into())),
    }
}

fn system_summary(sys: &QRSystem) -> Value {
    let (res, non) = quadratic_residues(sys.q() as u64);
    json!({
        "p": sys.p(),
        "q": sys.q(),
        "theta": sys.theta(),
        "q_mod_4": sys.q() % 4,
        "residues": res,
        "nonresidues": non,
        "e1": render::poly(sys.e1()),
        "e2": render::poly(sys.e2()),
        "et1": render::poly(sys.et1()),
        "et2": render::poly(sys.et2()),
    })
}

fn qr_cmd(cmd: &QrCommand) -> Outcome {
    match cmd {
        QrCommand::Build { sys, select } => {
            let sys = system(sys)?;
            let mut payload = system_summary(&sys);
            if let Some((fam, mask)) = selection(select)? {
                let code = sys.code(mask, fam)?;
                let (dfam, dmask) = sys.dual_of(mask, fam);
                payload["label"] = json!(label_string(mask, fam));
                payload["mask"] = json!(mask);
                payload["idempotent"] = render::rpoly(&sys.idempotent(mask, fam), sys.p());
                payload["code"] = render::r_code(&code);
                payload["dual_label"] = json!(label_string(dmask, dfam));
                payload["self_orthogonal"] = json!(code.is_self_orthogonal());
            }
            Ok(tagged("qr build", payload))
        }
        QrCommand::Verify { sys, suite } => {
            let sys = system(sys)?;
            let reports = run_suites(&sys, *suite)?;
            let passed = reports.iter().all(|r| r.passed);
            let value = tagged(
                "qr verify",
                json!({ "p": sys.p(), "q": sys.q(), "theta": sys.theta(), "passed": passed, "reports": reports }),
            );
            if passed {
                Ok(value)
            } else {
                Err(Failure::Verification(value))
            }
        }
        QrCommand::Extend { sys, select } => {
            let sys = system(sys)?;
            let mask = extended_mask(select)?;
            let ext = sys.extended_code(mask)?;
            Ok(tagged(
                "qr extend",
                json!({
                    "p": sys.p(),
                    "q": sys.q(),
                    "label": label_string(mask, Family::Q),
                    "mask": mask,
                    "border": sys.border(mask)?,
                    "code": render::r_code(&ext),
                    "generator_rows": render::rows(&ext.generator_rows()),
                    "self_dual": ext.is_self_dual(),
                }),
            ))
        }
        QrCommand::Gray { sys, select, basis } => {
            let sys = system(sys)?;
            let mask = extended_mask(select)?;
            let ext = sys.extended_code(mask)?;
            let image = psi_image_code(&ext, &PsiMatrix::new(sys.field())?);
            Ok(tagged(
                "qr gray",
                json!({
                    "p": sys.p(),
                    "q": sys.q(),
                    "label": label_string(mask, Family::Q),
                    "mask": mask,
                    "image": render::fp_code(&image, *basis),
                    "self_orthogonal": image.is_self_orthogonal(),
                    "self_dual": image.is_self_dual(),
                }),
            ))
        }
    }
}

pub fn run_suites(sys: &QRSystem, suite: Suite) -> Result<Vec<Report>, Failure> {
    let wanted = |s: Suite| suite == Suite::All || suite == s;
    let mut out = Vec::new();
    if wanted(Suite::Identities) {
        out.push(qr::verify_identities(sys));
    }
    if wanted(Suite::Lattice) {
        out.push(qr::verify_lattice(sys)?);
    }
    if wanted(Suite::Duality) {
        out.push(qr::verify_duality(sys)?);
    }
    if wanted(Suite::Extended) {
        out.push(qr::verify_extended(sys)?);
    }
    Ok(out)
}

fn ring_cmd(cmd: &RingCommand) -> Outcome {
    let (args, name) = match cmd {
        RingCommand::Decompose(a) => (a, "ring decompose"),
        RingCommand::Mul { a, .. } => (a, "ring mul"),
        RingCommand::Inverse(a) => (a, "ring inverse"),
    };
    let r = ring(args.p)?;
    let x = r.parse(&args.x)?;
    let result = match cmd {
        RingCommand::Decompose(_) => json!({ "components": r.decompose(&x) }),
        RingCommand::Mul { y, .. } => {
            let y = r.parse(y)?;
            json!({ "y": y.to_string(), "product": r.mul(&x, &y).to_string() })
        }
        RingCommand::Inverse(_) => json!({ "inverse": r.inverse(&x)?.to_string() }),
    };
    let mut payload = json!({ "p": args.p, "x": x.to_string() });
    if let (Value::Object(dst), Value::Object(src)) = (&mut payload, result) {
        dst.extend(src);
    }
    Ok(tagged(name, payload))
}
