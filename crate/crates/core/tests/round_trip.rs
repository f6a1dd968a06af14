use wsn_datagen::deployment::{Deployer, Mode, YIncrement};
use wsn_datagen::io::{self, Format};
use wsn_datagen::traffic::{Distribution, TrafficGenerator};

#[test]
fn deployment_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let deployer = Deployer {
        y_increment: YIncrement::C,
        height: Some(60.0),
        ..Deployer::default()
    };
    for (i, mode) in [Mode::NonGrid, Mode::Grid].into_iter().enumerate() {
        let d = deployer.generate(mode, 37, 80.0, 11 + i as u64).unwrap();

        let json = dir.path().join("d.json");
        io::write_deployment(&d, &json, Format::Json).unwrap();
        assert_eq!(io::read_deployment_json(&json).unwrap(), d);

        let csv = dir.path().join("d.csv");
        io::write_deployment(&d, &csv, Format::Csv).unwrap();
        assert_eq!(io::read_points_csv(&csv).unwrap(), d.points);
    }
}

#[test]
fn traffic_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let gen = TrafficGenerator::default();
    for dist in [
        Distribution::Uniform,
        Distribution::ExponentialTransform,
        Distribution::ExponentialRecurrence,
    ] {
        let m = gen.generate(dist, 13, 7, 2.0, 10.0, 0.7).unwrap();

        let json = dir.path().join("t.json");
        io::write_traffic(&m, &json, Format::Json).unwrap();
        assert_eq!(io::read_traffic_json(&json).unwrap(), m);

        let csv = dir.path().join("t.csv");
        io::write_traffic(&m, &csv, Format::Csv).unwrap();
        assert_eq!(io::read_matrix_csv(&csv).unwrap(), m.values);
    }
}

#[test]
fn csv_numbers_are_shortest_round_trip() {
    let d = Deployer::default()
        .generate(Mode::NonGrid, 50, 100.0, 9)
        .unwrap();
    let text = String::from_utf8(io::deployment_csv(&d).unwrap()).unwrap();
    for (line, p) in text.lines().skip(1).zip(&d.points) {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols[1], format!("{}", p.x));
        assert_eq!(cols[2], format!("{}", p.y));
        assert_eq!(cols[1].parse::<f64>().unwrap().to_bits(), p.x.to_bits());
    }
}
