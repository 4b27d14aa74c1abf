import setuptools

if __name__ == "__main__":
    setuptools.setup(version="1.0.0")
