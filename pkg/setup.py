"""See README for description."""
from setuptools import setup
import surjtools

setup(name="SurjTools",
    version=surjtools.__version__,
    description="Exact representation theory of the category of finite sets "
                "and surjections",
    long_description=__doc__,
    packages=["surjtools"],
    install_requires=["numpy", "scipy"],
    entry_points={"console_scripts" : ["surjtools = surjtools.cli:main"]},
    platforms=["N/A"],
    license="GNU LGPLv3",
)
