use std::process::Command as Process;

use lyabound::{AbelianStratum, ComponentLabel, QuadraticSignature};
use lyabound_cli::{parse_args, run, Command, Format, Invocation, ModeArg, EXIT_USAGE};
use proptest::prelude::*;

fn lyabound(args: &[&str]) -> (i32, String, String) {
    let out = Process::new(env!("CARGO_BIN_EXE_lyabound"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn parse_examples() {
    let inv = parse_args([
        "lyabound", "bound", "--zeros", "2,2,1,1", "--mode", "non-hyp",
    ])
    .unwrap();
    assert!(matches!(
        inv.command,
        Command::Bound {
            mode: ModeArg::NonHyp,
            ..
        }
    ));
    assert_eq!(inv.format, Format::Text);

    let inv = parse_args(["lyabound", "hyp", "--quadratic", "4,4,-1x12"]).unwrap();
    assert_eq!(
        inv.command,
        Command::Hyp(QuadraticSignature::parse("4,4,-1x12").unwrap())
    );

    let err = parse_args(["lyabound", "bound", "--zeros", "2,3"]).unwrap_err();
    assert_eq!(err.code, EXIT_USAGE);
    assert!(err.message.contains("integral genus"), "{}", err.message);
}

#[test]
fn usage_errors() {
    let bad: &[&[&str]] = &[
        &["lyabound"],
        &["lyabound", "frobnicate"],
        &["lyabound", "bound", "--zeros", "2", "--bogus"],
        &["lyabound", "bound", "--zeros", "2,x"],
        &["lyabound", "bound", "--zeros", "2,2", "--mode", "hyp-exact"],
        &[
            "lyabound",
            "bound",
            "--zeros",
            "4",
            "--mode",
            "hyp-exact",
            "--quadratic",
            "4,-1x8",
        ],
        &[
            "lyabound",
            "bound",
            "--zeros",
            "2,2",
            "--quadratic",
            "4,-1x8",
        ],
        &["lyabound", "hyp", "--quadratic", "2,-1,-1"],
        &["lyabound", "cyclic", "--n", "4", "--a", "2,2,2,2"],
        &["lyabound", "cyclic", "--n", "4", "--a", "3,1,3"],
        &["lyabound", "table", "6"],
        &["lyabound", "partial", "--zeros", "2", "--k", "3"],
    ];
    for argv in bad {
        let err = parse_args(argv.iter()).unwrap_err();
        assert_eq!(err.code, EXIT_USAGE, "{argv:?}");
    }
    let help = parse_args(["lyabound", "--help"]).unwrap_err();
    assert_eq!(help.code, 0);
}

#[test]
fn binary_exit_codes() {
    let (code, _, stderr) = lyabound(&["bound", "--zeros", "2,3"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("integral genus"));
    let (code, stdout, _) = lyabound(&["table", "3"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 8);
    let (code, _, _) = lyabound(&["--help"]);
    assert_eq!(code, 0);
}

#[test]
fn golden_json() {
    let cases: &[(&[&str], &str)] = &[
        (
            &[
                "--format", "json", "bound", "--zeros", "2,2,1,1", "--mode", "non-hyp",
            ],
            r#"{"stratum":[2,2,1,1],"genus":4,"mode":"non-hyp","w_upper":["1","1/2","1/3","1/3"],"sum_upper":"13/6","theorem_cap":"5/2","effective_sum":"13/6","kappa_lower":"25/36","equality_case":"not_equality","H_used":[1,3,5,6],"assumption_required":false}"#,
        ),
        (
            &["--format", "json", "bound", "--zeros", "1,1,1,1"],
            r#"{"stratum":[1,1,1,1],"genus":3,"mode":"generic","w_upper":["1","1/2","1/2"],"sum_upper":"2","theorem_cap":"2","effective_sum":"2","kappa_lower":"1/2","equality_case":"minimal_stratum_possible","H_used":[1,2,4],"assumption_required":false}"#,
        ),
        (
            &["--format", "json", "bound", "--zeros", "2"],
            r#"{"stratum":[2],"genus":2,"mode":"generic","w_upper":["1","1/3"],"sum_upper":"4/3","theorem_cap":"3/2","effective_sum":"4/3","kappa_lower":"2/9","equality_case":"not_equality","H_used":[1,2],"assumption_required":false}"#,
        ),
        (
            &[
                "--format",
                "json",
                "bound",
                "--zeros",
                "2,2,2,2",
                "--mode",
                "hyp-exact",
                "--quadratic",
                "4,4,-1x12",
            ],
            r#"{"stratum":[2,2,2,2],"genus":5,"mode":"hyp-exact","w_upper":["1","2/3","2/3","1/3","1/3"],"sum_upper":"3","theorem_cap":"3","effective_sum":"3","kappa_lower":"8/9","equality_case":"hyperelliptic_max_sum","H_used":[1,2,4,6,8],"assumption_required":false}"#,
        ),
        (
            &["--format", "json", "hyp", "--quadratic", "3,-1x7"],
            r#"{"quadratic":"3,-1x7","stratum":[4],"genus":3,"w":["1","3/5","1/5"],"sum":"9/5","max_sum":false,"connectivity_assumed":true}"#,
        ),
        (
            &["--format", "json", "hyp", "--quadratic", "8,-1x12"],
            r#"{"quadratic":"8,-1x12","stratum":[4,4],"genus":5,"w":["1","4/5","3/5","2/5","1/5"],"sum":"3","max_sum":true,"connectivity_assumed":true}"#,
        ),
        (
            &["--format", "json", "cyclic", "--n", "4", "--a", "3,1,3,1"],
            r#"{"n":4,"a":[3,1,3,1],"genus":3,"spectrum":["1","1/2","1/2"]}"#,
        ),
        (
            &["--format", "json", "partial", "--zeros", "6", "--k", "2"],
            r#"{"stratum":[6],"genus":4,"mode":"generic","k":2,"partial_sum":"12/7","w_upper":["1","5/7","3/7","1/7"]}"#,
        ),
    ];
    for (args, expected) in cases {
        let (code, stdout, stderr) = lyabound(args);
        assert_eq!(code, 0, "{args:?}: {stderr}");
        assert_eq!(stdout.trim_end(), *expected, "{args:?}");
        // byte-identical on a second run
        assert_eq!(lyabound(args).1, stdout);
    }
}

#[test]
fn check_command_passes() {
    let (code, stdout, _) = lyabound(&["check"]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.lines().all(|l| l.starts_with("PASS")), "{stdout}");
    assert_eq!(stdout.lines().count(), 16);
}

fn arb_stratum() -> impl Strategy<Value = AbelianStratum> {
    (
        prop::collection::vec(1u32..7, 1..6),
        prop::sample::select(vec!["", ":odd", ":even", ":hyp", ":non-hyp"]),
    )
        .prop_map(|(mut zeros, label)| {
            if zeros.iter().sum::<u32>() % 2 == 1 {
                zeros.push(1);
            }
            AbelianStratum::parse(&format!(
                "{}{label}",
                zeros
                    .iter()
                    .map(|z| z.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ))
            .unwrap()
        })
}

fn arb_quadratic() -> impl Strategy<Value = QuadraticSignature> {
    prop::collection::vec(1i32..12, 1..4).prop_map(|mut orders| {
        let total: i32 = orders.iter().sum();
        orders.extend(std::iter::repeat_n(-1, total as usize + 4));
        QuadraticSignature::new(&orders).unwrap()
    })
}

fn arb_invocation() -> impl Strategy<Value = Invocation> {
    let format = prop::sample::select(vec![Format::Text, Format::Json]);
    let mode = prop::sample::select(vec![ModeArg::Generic, ModeArg::NonHyp]);
    let command = prop_oneof![
        (arb_stratum(), mode.clone()).prop_map(|(stratum, mode)| Command::Bound {
            stratum,
            mode,
            quadratic: None
        }),
        arb_quadratic().prop_map(|q| {
            let stratum = q.hyperelliptic_locus().unwrap().induced().clone();
            Command::Bound {
                stratum,
                mode: ModeArg::HypExact,
                quadratic: Some(q),
            }
        }),
        (arb_stratum(), mode, any::<prop::sample::Index>()).prop_map(|(stratum, mode, i)| {
            let k = i.index(stratum.genus() as usize) + 1;
            Command::Partial {
                stratum,
                mode,
                quadratic: None,
                k,
            }
        }),
        arb_quadratic().prop_map(Command::Hyp),
        arb_quadratic().prop_map(Command::Cover),
        (2u32..20).prop_map(|h| Command::Cyclic {
            n: 2 * h,
            a: [2 * h - 1, 1, 2 * h - 1, 1]
        }),
        (3u32..=5).prop_map(Command::Table),
        Just(Command::Check),
    ];
    (command, format).prop_map(|(command, format)| Invocation { command, format })
}

proptest! {
    #[test]
    fn render_parse_round_trip(inv in arb_invocation()) {
        prop_assert_eq!(parse_args(inv.to_args()), Ok(inv));
    }

    #[test]
    fn bound_json_is_deterministic(s in arb_stratum()) {
        let inv = Invocation { command: Command::Bound { stratum: s, mode: ModeArg::Generic, quadratic: None }, format: Format::Json };
        let first = run(&inv);
        prop_assert_eq!(first.code, 0);
        prop_assert_eq!(run(&inv), first);
    }
}

#[test]
fn component_label_survives_round_trip() {
    let inv = parse_args(["lyabound", "bound", "--zeros", "1,3:odd"]).unwrap();
    match &inv.command {
        Command::Bound { stratum, .. } => assert_eq!(stratum.component(), ComponentLabel::Odd),
        other => panic!("{other:?}"),
    }
    assert_eq!(parse_args(inv.to_args()).unwrap(), inv);
}
