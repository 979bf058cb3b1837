use ssnm_core::data::{generate_synthetic, save_libsvm, SyntheticSpec};
use ssnm_core::model::smoothness_constant;

use crate::commands::data_err;
use crate::outputs::write_atomic;
use crate::{CliError, GenDataArgs};

pub(crate) fn execute(args: GenDataArgs) -> Result<(), CliError> {
    let spec = SyntheticSpec {
        n: args.n,
        d: args.d,
        target_kappa: args.kappa,
        noise: args.noise,
        feature_decay: args.decay,
        seed: args.seed,
        loss: args.loss,
    };
    let (dataset, lambda2) = generate_synthetic(&spec).map_err(data_err)?;
    save_libsvm(&dataset, &args.out).map_err(data_err)?;

    let l_smooth = smoothness_constant(&dataset, args.loss).map_err(data_err)?;
    let achieved_kappa = l_smooth / lambda2;
    let manifest = serde_json::to_string_pretty(&serde_json::json!({
        "spec": spec,
        "lambda2": lambda2,
        "l_smooth": l_smooth,
        "achieved_kappa": achieved_kappa,
    }))
    .map_err(|e| CliError::Data(e.into()))?;
    let manifest_path = args.out.with_extension("manifest.json");
    write_atomic(&manifest_path, manifest.as_bytes()).map_err(CliError::Data)?;

    println!(
        "wrote {} (n={}, d={}): lambda2 = {:e}, achieved kappa = {:e} (target {:e})",
        args.out.display(),
        dataset.n(),
        dataset.d(),
        lambda2,
        achieved_kappa,
        args.kappa
    );
    Ok(())
}
