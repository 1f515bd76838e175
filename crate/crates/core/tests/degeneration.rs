use hesse_lab::curvelab::{singular_points, SingularityTag};
use hesse_lab::degeneration::{dual_curve, w0_singularity_audit};
use hesse_lab::hesse::{flex_data, hesse_cubic, PencilParam};
use hesse_lab::projective::ProjPoint;

#[test]
fn dual_of_e1_has_nine_cusps() {
    let e = hesse_cubic(&PencilParam::int(1));
    let d = dual_curve(&e).unwrap();
    assert_eq!(d.curve.degree(), 6);
    assert!(d.sampled >= 10);
    assert!(d.bidual >= 10);
    let locus = singular_points(&d.curve).unwrap();
    assert!(locus.certificates.is_empty());
    assert_eq!(locus.records.len(), 9);
    assert!(locus.records.iter().all(|r| r.tag == SingularityTag::CuspA2));
    // cusps sit at the flex tangents, read as points of the dual plane
    let fd = flex_data(&PencilParam::int(1)).unwrap();
    let mut expected: Vec<ProjPoint> = fd.tangents.iter().map(|l| l.as_dual_point()).collect();
    expected.sort();
    let got: Vec<ProjPoint> = locus.records.iter().map(|r| r.point.clone()).collect();
    assert_eq!(got, expected);
}

#[test]
fn w0_audit_general_member() {
    let a = w0_singularity_audit(&PencilParam::int(2)).unwrap();
    assert_eq!(a.degree, 18);
    assert_eq!(a.node_count, 36);
    assert_eq!(a.meeting_records.len(), 36);
    assert_eq!(a.tangencies.len(), 9);
    assert!(a.tangencies.iter().all(|(_, m)| *m == 3));
    assert_eq!(a.meets_on_e, 0);
    assert!(a.per_line.iter().all(|&n| n == 4));
    assert!(a.other.is_empty());
}
