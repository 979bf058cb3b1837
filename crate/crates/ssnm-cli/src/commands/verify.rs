use ssnm_core::verify::run_suite;

use crate::{classify_solver_error, CliError, VerifyArgs};

pub(crate) fn execute(args: VerifyArgs) -> Result<(), CliError> {
    let reports = run_suite(args.suite, args.seeds).map_err(classify_solver_error)?;
    let mut all_pass = true;
    for report in &reports {
        println!("{}", report.to_json_line());
        all_pass &= report.pass;
    }
    if all_pass {
        Ok(())
    } else {
        Err(CliError::VerificationFailed)
    }
}
