"""
Runs all the example files in surjtools showing only success or failure.
Error messages are copied to a log file.

Example output is hidden. Examples that build QSE_4 take a little while; the
unit tests are run separately with

    python -m unittest surjtools._tests
"""
import sys, traceback
import surjtools
from surjtools.util import (stdout_redirected, strcolor, dummy_context,
                            runfile, printstatus)

# Turn off output
surjtools.setMaxVerbosity(0)
showoutput = set(sys.argv[1:])

logfile = open("runall-python%d.log" % sys.version_info.major, "w")

# List of files. We hard-code these so that we explicitly pick everything.
examplefiles = [
    "dihedral.py",
    "secondblock.py",
    "quiverpt4.py",
    "gdimladder.py",
]

# Now loop through everybody.
printstatus(__doc__, level=0)
abort = False
failures = []
for f in examplefiles:
    printstatus(strcolor("%s ... " % f, "blue"), level=0, end="")
    try:
        context = dummy_context if f in showoutput else stdout_redirected
        with context():
            runfile(f)
            status = strcolor("succeeded", "green", bold=True)
    except KeyboardInterrupt:
        status = "\n\n%s\n" % (strcolor("*** USER INTERRUPT ***", "yellow"),)
        abort = True
    except Exception:
        logfile.write("*** Error running <%s>:\n" % f)
        traceback.print_exc(file=logfile)
        status = strcolor("FAILED", "red", bold=True)
        failures.append(f)
    finally:
        printstatus(status, level=0)
        if abort:
            break
logfile.close()

# Print final status.
if len(failures) > 0:
    printstatus(strcolor("%d scripts failed!" % len(failures), "red",
                         bold=True), level=0)
    for (i, f) in enumerate(failures):
        printstatus("    %d. %s" % (i + 1, f), level=0)
    printstatus(strcolor("See <%s> for more details." % logfile.name, "red",
                         bold=True), level=0)
    sys.exit(1)
else:
    printstatus(strcolor("All examples successful.", "green", bold=True),
                level=0)
